"""
Polarization tensors and the transverse-traceless projector.
"""
import numpy as np
import pytest

from entanglement_harvest.errors import DomainError
from entanglement_harvest.oracle import polarization_basis, tt_projector
from entanglement_harvest.oracle.polarization import helicity_two_components


@pytest.fixture
def basis():
    rng = np.random.default_rng(11)
    return polarization_basis(rng.uniform(0.0, np.pi, 40), rng.uniform(0.0, 2 * np.pi, 40))


def test_vectors_form_a_right_handed_frame(basis):
    np.testing.assert_allclose(np.cross(basis.e1, basis.e2), basis.khat, atol=1e-14)
    np.testing.assert_allclose(np.einsum("ni,ni->n", basis.e1, basis.khat), 0.0, atol=1e-14)


def test_tensors_are_orthonormal_transverse_and_traceless(basis):
    for E in (basis.E1, basis.E2):
        np.testing.assert_allclose(np.einsum("nii->n", E), 0.0, atol=1e-14)
        np.testing.assert_allclose(np.einsum("nij,nj->ni", E, basis.khat), 0.0, atol=1e-14)
        np.testing.assert_allclose(np.einsum("nij,nij->n", E, E), 1.0, atol=1e-14)
    np.testing.assert_allclose(np.einsum("nij,nij->n", basis.E1, basis.E2), 0.0, atol=1e-14)


def test_projector_is_the_polarization_sum():
    single = polarization_basis(0.8, 2.1)
    P = tt_projector(single.khat)
    completeness = (np.einsum("ij,kl->ijkl", single.E1, single.E1)
                    + np.einsum("ij,kl->ijkl", single.E2, single.E2))
    np.testing.assert_allclose(completeness, P, atol=1e-14)
    np.testing.assert_allclose(np.einsum("ijkl,klmn->ijmn", P, P), P, atol=1e-14)
    np.testing.assert_allclose(np.einsum("ijkl,kl->ij", P, np.eye(3)), 0.0, atol=1e-14)


def test_projector_needs_a_unit_vector():
    with pytest.raises(DomainError):
        tt_projector([1.0, 1.0, 0.0])


def test_helicity_components_of_isotropic_tensors_vanish(basis):
    khat = basis.khat
    tensors = 0.3 * np.eye(3) - 2.0 * khat[:, :, None] * khat[:, None, :]
    assert np.max(np.abs(helicity_two_components(tensors, basis))) < 1e-14
