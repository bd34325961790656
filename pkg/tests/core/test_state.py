"""
Density matrix assembly and negativity.
"""
import warnings

import numpy as np
import pytest

from entanglement_harvest.core import (
    TwoDetectorState, assemble_density_matrix, negativity, negativity_from_magnitudes,
    negativity_leading_order, negativity_oracle, partial_transpose,
)
from entanglement_harvest.errors import PerturbativityWarning


def test_density_matrix_layout_and_trace():
    state = TwoDetectorState(L_AA=0.01, L_BB=0.02, M=0.003 + 0.004j, L_AB=0.001j)
    rho = assemble_density_matrix(state)
    assert np.trace(rho) == pytest.approx(1.0)
    np.testing.assert_allclose(rho, rho.conj().T)
    assert rho[3, 0] == state.M
    assert rho[1, 2] == np.conj(state.L_AB)


def test_closed_form_matches_partial_transpose_on_symmetric_states():
    for L, M in [(1e-3, 2e-3), (2e-3, 1.5e-3 - 2e-3j), (1e-6, 3e-6j)]:
        state = TwoDetectorState(L_AA=L, L_BB=L, M=M)
        assert negativity(state) == pytest.approx(negativity_oracle(state), rel=1e-8, abs=1e-15)
        assert negativity(state) > 0


def test_asymmetric_states_follow_the_eigenvalue_form():
    state = TwoDetectorState(L_AA=1e-3, L_BB=3e-3, M=4e-3)
    expected = negativity_leading_order(state.L_AA, state.L_BB, state.abs_M)
    assert negativity_oracle(state) == pytest.approx(expected, rel=1e-9)
    assert negativity(state) < expected


def test_no_entanglement_when_local_noise_dominates():
    state = TwoDetectorState(L_AA=2e-3, L_BB=2e-3, M=1e-3)
    assert negativity(state) == 0.0
    assert negativity_oracle(state) == pytest.approx(0.0, abs=1e-15)


def test_negative_radicand_gives_zero():
    assert negativity_from_magnitudes(1e-3, 5e-3, 1e-3) == 0.0


def test_partial_transpose_is_an_involution():
    rng = np.random.default_rng(3)
    rho = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    np.testing.assert_allclose(partial_transpose(partial_transpose(rho)), rho)


def test_swapped_and_scaled():
    state = TwoDetectorState(L_AA=1e-3, L_BB=2e-3, M=1e-3j, L_AB=1e-4 + 2e-4j)
    swapped = state.swapped()
    assert (swapped.L_AA, swapped.L_BB) == (state.L_BB, state.L_AA)
    assert swapped.L_AB == state.L_BA
    scaled = state.scaled(4.0)
    assert scaled.M == pytest.approx(4e-3j)
    assert negativity(TwoDetectorState(1e-3, 1e-3, 3e-3).scaled(2.0)) == pytest.approx(4e-3)


def test_perturbativity_warning_still_returns_matrix():
    state = TwoDetectorState(L_AA=0.6, L_BB=0.6, M=0.1)
    with pytest.warns(PerturbativityWarning):
        rho = assemble_density_matrix(state)
    assert rho.shape == (4, 4)


def test_small_states_do_not_warn():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assemble_density_matrix(TwoDetectorState(L_AA=0.1, L_BB=0.1))
