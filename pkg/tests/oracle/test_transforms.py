"""
Smearing transforms: multipole route against closed forms, and placement.
"""
import math

import numpy as np
import pytest

from entanglement_harvest.core import CouplingModel, GaussianHarmonic, GaussianIsotropic
from entanglement_harvest.integration import sphere_rule
from entanglement_harvest.oracle.momentum import helicity_fraction
from entanglement_harvest.oracle.transforms import (
    GaussianClosedForm, MultipoleTransform, PlacedTransform, radial_grid, smearing_transform,
)
from entanglement_harvest.special import AngularQuantum, rotation_matrix

SIGMA = 0.3


@pytest.fixture(scope="module")
def directions():
    return sphere_rule(5, 7).directions.reshape(-1, 3)


def test_radial_grid_integrates_polynomials():
    nodes, weights = radial_grid(2.0, panels=4, order=8)
    assert np.sum(weights * nodes ** 5) == pytest.approx(64.0 / 6.0, rel=1e-13)


@pytest.mark.parametrize("model", list(CouplingModel))
def test_multipole_route_matches_closed_form(model, directions):
    k = np.array([0.0, 0.5, 2.0, 6.0])
    harmonic = MultipoleTransform(GaussianHarmonic(SIGMA, AngularQuantum(0, 0)), model)
    closed = GaussianClosedForm(GaussianIsotropic(SIGMA), model)
    expected = closed(k, directions) / math.sqrt(4.0 * math.pi)
    got = harmonic(k, directions)
    np.testing.assert_allclose(got, expected, atol=1e-12 * np.max(np.abs(expected)))


def test_smearing_transform_dispatch():
    assert isinstance(smearing_transform(GaussianIsotropic(SIGMA), CouplingModel.SCALAR_LINEAR),
                      GaussianClosedForm)
    assert isinstance(smearing_transform(GaussianHarmonic(SIGMA), CouplingModel.SCALAR_LINEAR),
                      MultipoleTransform)


def test_l2_transform_carries_quadrupole_and_hexadecapole_orders():
    transform = MultipoleTransform(GaussianHarmonic(SIGMA, AngularQuantum(2, 0)),
                                   CouplingModel.GRAVITY_QUADRUPOLE)
    assert transform.orders() == [0, 2, 4]


def test_rotating_an_isotropic_tensor_changes_nothing(directions):
    k = np.array([0.5, 3.0])
    base = GaussianClosedForm(GaussianIsotropic(SIGMA), CouplingModel.GRAVITY_QUADRUPOLE)
    placed = PlacedTransform(base, rotation_matrix(0.3, 1.1, -0.4), 0.0)
    np.testing.assert_allclose(placed(k, directions), base(k, directions), atol=1e-14)


def test_separation_adds_a_plane_wave_phase(directions):
    k = np.array([0.5, 3.0])
    base = GaussianClosedForm(GaussianIsotropic(SIGMA), CouplingModel.SCALAR_LINEAR)
    placed = PlacedTransform(base, np.eye(3), 4.0)
    phase = np.exp(1j * 4.0 * np.outer(k, directions[:, 2]))
    np.testing.assert_allclose(placed(k, directions), base(k, directions) * phase, atol=1e-14)


def test_helicity_fraction_separates_the_selection_rule():
    k = np.array([0.5, 1.0, 3.0])
    assert helicity_fraction(GaussianHarmonic(SIGMA, AngularQuantum(0, 0)), k) < 1e-20
    assert helicity_fraction(GaussianHarmonic(SIGMA, AngularQuantum(2, 0)), k) > 1e-3
