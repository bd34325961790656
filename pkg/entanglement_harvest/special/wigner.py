"""
Wigner 3j symbols, small-d and D rotation matrices, and Euler-angle helpers.

Angles follow the z-y-z convention R(psi, vartheta, varphi) =
Rz(psi) Ry(vartheta) Rz(varphi), with
D^l_{mu m}(psi, vartheta, varphi) = e^{-i mu psi} d^l_{mu m}(vartheta) e^{-i m varphi}.
"""
from math import factorial, sqrt
from typing import Tuple

import numpy as np

from ..errors import DomainError, UnsupportedOrderError

MAX_WIGNER_DEGREE = 16


def _triangle_ok(l1: int, l2: int, l3: int) -> bool:
    return abs(l1 - l2) <= l3 <= l1 + l2


def wigner_3j(l1: int, l2: int, l3: int, m1: int, m2: int, m3: int) -> float:
    """
    Wigner 3j symbol by the Racah formula.

    Factorials are exact integers; only the final alternating sum and the
    square root are taken in floating point.

    Args:
        l1, l2, l3: Non-negative degrees
        m1, m2, m3: Orders with |m_i| <= l_i

    Returns:
        float: The 3j symbol, exactly 0.0 when a selection rule fails
    """
    for l, m in ((l1, m1), (l2, m2), (l3, m3)):
        if l < 0 or abs(m) > l:
            raise DomainError(f"invalid 3j entry l={l}, m={m}")
    if m1 + m2 + m3 != 0 or not _triangle_ok(l1, l2, l3):
        return 0.0
    if max(l1, l2, l3) > MAX_WIGNER_DEGREE:
        raise UnsupportedOrderError(f"3j degree above cap {MAX_WIGNER_DEGREE}")

    triangle_num = factorial(l1 + l2 - l3) * factorial(l1 - l2 + l3) * factorial(-l1 + l2 + l3)
    triangle_den = factorial(l1 + l2 + l3 + 1)
    moments = (factorial(l1 + m1) * factorial(l1 - m1) * factorial(l2 + m2)
               * factorial(l2 - m2) * factorial(l3 + m3) * factorial(l3 - m3))

    k_min = max(0, l2 - l3 - m1, l1 - l3 + m2)
    k_max = min(l1 + l2 - l3, l1 - m1, l2 + m2)
    total = 0.0
    for k in range(k_min, k_max + 1):
        denom = (factorial(k) * factorial(l3 - l2 + k + m1) * factorial(l3 - l1 + k - m2)
                 * factorial(l1 + l2 - l3 - k) * factorial(l1 - k - m1) * factorial(l2 - k + m2))
        total += (-1) ** k / denom
    sign = (-1) ** (l1 - l2 - m3)
    return sign * sqrt(triangle_num * moments / triangle_den) * total


def wigner_small_d(l: int, mu: int, m: int, beta) -> np.ndarray:
    """
    Wigner small-d matrix element d^l_{mu m}(beta) from the factorial sum.

    Args:
        l: Degree
        mu: Row index
        m: Column index
        beta: Rotation angle about y in radians

    Returns:
        np.ndarray: d^l_{mu m}(beta)
    """
    if l < 0 or abs(mu) > l or abs(m) > l:
        raise DomainError(f"invalid Wigner indices l={l}, mu={mu}, m={m}")
    if l > MAX_WIGNER_DEGREE:
        raise UnsupportedOrderError(f"Wigner degree {l} above cap {MAX_WIGNER_DEGREE}")
    beta = np.asarray(beta, dtype=float)
    c = np.cos(0.5 * beta)
    s = np.sin(0.5 * beta)
    pref = sqrt(factorial(l + mu) * factorial(l - mu) * factorial(l + m) * factorial(l - m))
    total = np.zeros_like(beta)
    for k in range(max(0, m - mu), min(l + m, l - mu) + 1):
        denom = factorial(l + m - k) * factorial(k) * factorial(l - k - mu) * factorial(k - m + mu)
        total = total + ((-1) ** (k - m + mu) * pref / denom
                         * c ** (2 * l - 2 * k + m - mu) * s ** (2 * k - m + mu))
    return total


def wigner_D(l: int, mu: int, m: int, psi, vartheta, varphi) -> np.ndarray:
    """
    Wigner D-matrix element D^l_{mu m}(psi, vartheta, varphi).

    Args:
        l: Degree
        mu: Row index
        m: Column index
        psi: First Euler angle
        vartheta: Second Euler angle
        varphi: Third Euler angle

    Returns:
        np.ndarray: Complex matrix element
    """
    d = wigner_small_d(l, mu, m, vartheta)
    return np.exp(-1j * mu * np.asarray(psi)) * d * np.exp(-1j * m * np.asarray(varphi))


def wigner_D_matrix(l: int, psi: float, vartheta: float, varphi: float) -> np.ndarray:
    """Full (2l+1)x(2l+1) D matrix with rows and columns ordered mu, m = -l..l."""
    orders = range(-l, l + 1)
    return np.array([[complex(wigner_D(l, mu, m, psi, vartheta, varphi)) for m in orders]
                     for mu in orders])


def _rot_z(angle: float) -> np.ndarray:
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def _rot_y(angle: float) -> np.ndarray:
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])


def rotation_matrix(psi: float, vartheta: float, varphi: float) -> np.ndarray:
    """Active rotation Rz(psi) Ry(vartheta) Rz(varphi)."""
    return _rot_z(psi) @ _rot_y(vartheta) @ _rot_z(varphi)


def euler_from_matrix(rotation: np.ndarray) -> Tuple[float, float, float]:
    """
    Recover z-y-z Euler angles from a rotation matrix.

    Args:
        rotation: 3x3 proper rotation away from the gimbal points

    Returns:
        Tuple[float, float, float]: (psi, vartheta, varphi)
    """
    vartheta = float(np.arccos(np.clip(rotation[2, 2], -1.0, 1.0)))
    psi = float(np.arctan2(rotation[1, 2], rotation[0, 2]))
    varphi = float(np.arctan2(rotation[2, 1], -rotation[2, 0]))
    return psi, vartheta, varphi


def relabel_euler(psi: float, vartheta: float, varphi: float) -> Tuple[float, float, float]:
    """
    Euler angles of A's frame seen from B, used for the relabeled B-A summand.

    Returns:
        Tuple[float, float, float]: (-varphi, -vartheta, -psi)
    """
    return -varphi, -vartheta, -psi
