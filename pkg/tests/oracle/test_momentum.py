"""
Pointwise momentum-space integrands against the reduced kernels.
"""
import numpy as np
import pytest

from entanglement_harvest.core import CouplingModel, DetectorConfig
from entanglement_harvest.errors import DomainError, UnsupportedScenarioError
from entanglement_harvest.kernels import build_kernels
from entanglement_harvest.oracle import MomentumOracle
from entanglement_harvest.oracle.audit import DEFAULT_POINTS, EXPECTED_RATIOS
from entanglement_harvest.sweeps import build_pair
from entanglement_harvest.sweeps.scenarios import SCENARIOS

K = np.array([0.3, 1.0, 2.5, 5.0])


def _oracle(scenario, model, **params):
    A, B, geo = build_pair(scenario, params)
    return MomentumOracle(model, A, B, geo), build_kernels(scenario, A, B, geo)


def test_scalar_local_integrand_matches_kernel():
    oracle, kset = _oracle("scalar", CouplingModel.SCALAR_LINEAR, sigma=0.5, omega=2.0, L=6.0)
    got = oracle.l_integrand("AA")(K)
    np.testing.assert_allclose(got.real, kset.L_integrand(K), rtol=1e-10)
    assert np.max(np.abs(got.imag)) < 1e-12 * np.max(np.abs(got.real))


def test_scalar_nonlocal_integrand_matches_kernel():
    oracle, kset = _oracle("scalar", CouplingModel.SCALAR_LINEAR, sigma=0.5, omega=2.0, L=6.0)
    np.testing.assert_allclose(oracle.m_integrand()(K), kset.M_integrand(K), rtol=1e-9, atol=1e-15)


def test_cross_integrand_is_bounded_by_local():
    oracle, _ = _oracle("scalar", CouplingModel.SCALAR_LINEAR, sigma=0.5, omega=2.0, L=6.0)
    local = oracle.l_integrand("AA")(K).real
    cross = oracle.l_integrand("AB")(K)
    assert np.all(np.abs(cross) <= local * (1.0 + 1e-12))


def test_isotropic_gravitational_contraction_vanishes():
    oracle, _ = _oracle("gravity-gaussian", CouplingModel.GRAVITY_QUADRUPOLE, sigma=0.2, L=8.0)
    contracted = oracle.l_integrand("AA")(K)
    magnitude = oracle.l_integrand("AA", magnitude=True)(K)
    assert np.all(magnitude > 0)
    assert np.max(np.abs(contracted) / magnitude) < 1e-20


def test_unknown_pair_label():
    oracle, _ = _oracle("scalar", CouplingModel.SCALAR_LINEAR)
    with pytest.raises(DomainError):
        oracle.l_integrand("AC")


def test_nonlocal_oracle_needs_identical_gaps():
    A, _, geo = build_pair("scalar", {})
    B = DetectorConfig(A.lam, 2.0 * A.gap, A.smearing, A.switching)
    with pytest.raises(UnsupportedScenarioError):
        MomentumOracle(CouplingModel.SCALAR_LINEAR, A, B, geo).m_integrand()


def test_nonlocal_oracle_rejects_hydrogen():
    A, B, geo = build_pair("hydrogen-320", {"omega": 7.0, "L": 4.0})
    with pytest.raises(UnsupportedScenarioError):
        MomentumOracle(CouplingModel.GRAVITY_QUADRUPOLE, A, B, geo).m_value()


def test_expected_ratios_cover_audited_scenarios():
    assert set(EXPECTED_RATIOS) <= set(SCENARIOS)
    assert set(EXPECTED_RATIOS) <= set(DEFAULT_POINTS)
    for ratio_L, ratio_M in EXPECTED_RATIOS.values():
        assert ratio_L is not None and ratio_L >= 0.0
        assert ratio_M is None or ratio_M in (0.0, 1.0)
