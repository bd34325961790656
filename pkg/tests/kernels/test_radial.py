"""
General radial reduction, the hydrogen 1s -> 3d kernels and their tail split.
"""
import numpy as np
import pytest

from entanglement_harvest.core import HydrogenTransition
from entanglement_harvest.errors import UnsupportedScenarioError
from entanglement_harvest.integration import integrate_interval
from entanglement_harvest.kernels import (
    build_kernels, general_radial_kernels, hydrogen_320_kernels, integrate_kernels,
)
from entanglement_harvest.kernels.radial import hydrogen_profile
from entanglement_harvest.special import AngularQuantum
from entanglement_harvest.sweeps import build_pair


def _relative_gap(a, b):
    return np.max(np.abs(a - b)) / np.max(np.abs(a))


@pytest.mark.parametrize("theta", [0.0, 0.4, 1.3])
def test_general_radial_reproduces_gravity_l2(theta):
    A, B, geo = build_pair("gravity-l2", {"sigma": 0.2, "omega": 6.0, "L": 4.0, "theta": theta})
    printed = build_kernels("gravity-l2", A, B, geo)
    general = general_radial_kernels(A.smearing.radial_profile, A.smearing.q, A, B, geo)
    k = np.linspace(0.05, 20.0, 200)
    assert _relative_gap(printed.L_integrand(k), general.L_integrand(k)) <= 1e-10
    assert _relative_gap(printed.M_integrand(k), general.M_integrand(k)) <= 1e-10


def test_general_radial_reproduces_hydrogen_320():
    params = {"omega": 2.0, "L": 4.0, "alpha": 1.0, "theta": 0.3}
    A, B, geo = build_pair("hydrogen-320", params)
    a0 = A.smearing.a0
    assert a0 == pytest.approx(0.25)
    printed = hydrogen_320_kernels(A, B, geo)
    general = general_radial_kernels(A.smearing.radial_product, A.smearing.angular, A, B, geo)
    k = np.linspace(0.05, 3.0, 60) / a0
    np.testing.assert_allclose(general.L_integrand(k), printed.L_integrand(k), rtol=1e-6)
    np.testing.assert_allclose(general.M_integrand(k), printed.M_integrand(k), rtol=1e-6, atol=1e-30)


def test_hydrogen_profile_at_zero_momentum():
    assert hydrogen_profile(0.0, 1.0) == pytest.approx(1792.0 ** 2 / 16.0 ** 12)


def test_hydrogen_tail_split_matches_direct_integration():
    A, B, geo = build_pair("hydrogen-320", {"omega": 2.0, "L": 4.0, "alpha": 1.0})
    kset = hydrogen_320_kernels(A, B, geo)
    assert kset.m_tail is not None and len(kset.m_tail.terms) == 2
    split = integrate_kernels(kset, 1e-10).M
    direct = integrate_interval(kset.M_integrand, 0.0, 400.0, oscillation_scale=geo.L,
                                damping_scale=1.0, rel_tol=1e-12).value
    assert split == pytest.approx(direct, rel=1e-6)


def test_hydrogen_tail_for_coincident_detectors():
    A, B, geo = build_pair("hydrogen-320", {"omega": 2.0, "L": 0.0, "alpha": 1.0})
    kset = hydrogen_320_kernels(A, B, geo)
    assert len(kset.m_tail.terms) == 1 and kset.m_tail.terms[0][1] == 0.0
    split = integrate_kernels(kset, 1e-10).M
    direct = integrate_interval(kset.M_integrand, 0.0, 400.0, damping_scale=1.0, rel_tol=1e-12).value
    assert split == pytest.approx(direct, rel=1e-6)


def test_sigma_scale_rescales_hydrogen_L():
    A, B, geo = build_pair("hydrogen-320", {"omega": 2.0, "L": 4.0, "alpha": 1.0})
    k = np.array([0.5, 1.0, 2.0])
    base = hydrogen_320_kernels(A, B, geo).L_integrand(k)
    wide = hydrogen_320_kernels(A, B, geo, sigma_scale=2.0).L_integrand(k)
    ratio = wide / base
    expected = 16.0 * hydrogen_profile(k, 0.5) / hydrogen_profile(k, 0.25)
    np.testing.assert_allclose(ratio, expected, rtol=1e-12)


def test_s_wave_hydrogen_transitions_are_null_for_gravity():
    A, B, geo = build_pair("hydrogen-200", {"omega": 2.0, "L": 4.0, "alpha": 1.0})
    kset = build_kernels("hydrogen-200", A, B, geo)
    assert kset.scenario_tag.endswith("-null")
    result = integrate_kernels(kset)
    assert result.L == 0.0 and result.M == 0.0


def test_general_radial_order_limits():
    A, B, geo = build_pair("gravity-l2", {})
    with pytest.raises(UnsupportedScenarioError):
        general_radial_kernels(A.smearing.radial_profile, AngularQuantum(3, 0), A, B, geo)
    with pytest.raises(UnsupportedScenarioError):
        general_radial_kernels(A.smearing.radial_profile, AngularQuantum(2, 1), A, B, geo)


def test_hydrogen_320_rejects_other_transitions():
    A, B, geo = build_pair("hydrogen-300", {"omega": 2.0, "alpha": 1.0})
    assert isinstance(A.smearing, HydrogenTransition)
    with pytest.raises(UnsupportedScenarioError):
        hydrogen_320_kernels(A, B, geo)
