"""
Wigner 3j symbols and rotation matrices.
"""
import itertools
import math

import numpy as np
import pytest

from entanglement_harvest.oracle.racah import racah_3j_exact, racah_3j_squared
from entanglement_harvest.special import (
    euler_from_matrix, relabel_euler, rotation_matrix, wigner_3j, wigner_D_matrix, wigner_small_d,
)


def test_known_3j_values():
    assert wigner_3j(1, 1, 0, 0, 0, 0) == pytest.approx(-1.0 / math.sqrt(3.0))
    assert wigner_3j(2, 2, 0, 0, 0, 0) == pytest.approx(1.0 / math.sqrt(5.0))
    assert wigner_3j(1, 1, 2, 0, 0, 0) == pytest.approx(math.sqrt(2.0 / 15.0))
    assert wigner_3j(1, 1, 1, 0, 0, 0) == 0.0


def test_selection_rules_give_zero():
    assert wigner_3j(1, 1, 3, 0, 0, 0) == 0.0
    assert wigner_3j(2, 2, 2, 1, 1, 0) == 0.0


def test_3j_agrees_with_exact_racah_sum():
    for l1, l2, l3 in itertools.product(range(4), repeat=3):
        for m1, m2 in itertools.product(range(-l1, l1 + 1), range(-l2, l2 + 1)):
            m3 = -m1 - m2
            if abs(m3) > l3:
                continue
            assert wigner_3j(l1, l2, l3, m1, m2, m3) == pytest.approx(
                racah_3j_exact(l1, l2, l3, m1, m2, m3), abs=1e-13)


def test_racah_square_is_exact_rational():
    square = racah_3j_squared(1, 1, 2, 0, 0, 0)
    assert square.numerator == 2 and square.denominator == 15


def test_small_d_closed_forms():
    beta = np.linspace(0.0, np.pi, 13)
    np.testing.assert_allclose(wigner_small_d(1, 0, 0, beta), np.cos(beta), atol=1e-14)
    np.testing.assert_allclose(wigner_small_d(2, 0, 0, beta), 0.5 * (3 * np.cos(beta) ** 2 - 1), atol=1e-14)
    np.testing.assert_allclose(wigner_small_d(1, 1, 1, beta), 0.5 * (1 + np.cos(beta)), atol=1e-14)


@pytest.mark.parametrize("l", [1, 2, 3])
def test_D_matrix_is_unitary(l):
    D = wigner_D_matrix(l, 0.3, 1.1, -0.7)
    np.testing.assert_allclose(D @ D.conj().T, np.eye(2 * l + 1), atol=1e-13)


def test_D_matrix_composes_like_rotations():
    a = (0.4, 0.9, 1.3)
    b = (-0.8, 0.5, 0.2)
    product = euler_from_matrix(rotation_matrix(*a) @ rotation_matrix(*b))
    np.testing.assert_allclose(wigner_D_matrix(2, *a) @ wigner_D_matrix(2, *b),
                               wigner_D_matrix(2, *product), atol=1e-12)


def test_euler_round_trip():
    angles = (0.7, 1.2, -2.1)
    np.testing.assert_allclose(euler_from_matrix(rotation_matrix(*angles)), angles, atol=1e-12)


def test_relabel_euler_inverts_the_rotation():
    angles = (0.7, 1.2, -2.1)
    np.testing.assert_allclose(rotation_matrix(*relabel_euler(*angles)),
                               rotation_matrix(*angles).T, atol=1e-14)
