"""
Associated Legendre functions and orthonormal spherical harmonics.

The Condon-Shortley phase (-1)^m is included in P_l^m, and harmonics with
negative m are built from Y_{l,-m} = (-1)^m conj(Y_{l,m}) so that the
conjugation symmetry holds exactly.
"""
from dataclasses import dataclass
from math import factorial, pi, sqrt

import numpy as np

from ..errors import DomainError, UnsupportedOrderError

MAX_HARMONIC_DEGREE = 8


@dataclass(frozen=True)
class AngularQuantum:
    """
    Orbital quantum numbers of a state.

    Attributes:
        l (int): Orbital quantum number, non-negative
        m (int): Magnetic quantum number with |m| <= l
    """
    l: int
    m: int

    def __post_init__(self):
        if self.l < 0 or abs(self.m) > self.l:
            raise DomainError(f"invalid angular quantum numbers l={self.l}, m={self.m}")


def associated_legendre(l: int, m: int, x) -> np.ndarray:
    """
    Associated Legendre function P_l^m(x) with the Condon-Shortley phase.

    Args:
        l: Degree
        m: Order, |m| <= l
        x: Argument in [-1, 1]

    Returns:
        np.ndarray: P_l^m(x)
    """
    if l < 0 or abs(m) > l:
        raise DomainError(f"invalid Legendre indices l={l}, m={m}")
    x = np.asarray(x, dtype=float)
    if m < 0:
        mm = -m
        ratio = factorial(l - mm) / factorial(l + mm)
        return (-1) ** mm * ratio * associated_legendre(l, mm, x)
    # P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}
    somx2 = np.sqrt(np.clip(1.0 - x * x, 0.0, None))
    pmm = np.ones_like(x)
    fact = 1.0
    for _ in range(m):
        pmm = -pmm * fact * somx2
        fact += 2.0
    if l == m:
        return pmm
    pmmp1 = x * (2 * m + 1) * pmm
    if l == m + 1:
        return pmmp1
    for ll in range(m + 2, l + 1):
        pll = ((2 * ll - 1) * x * pmmp1 - (ll + m - 1) * pmm) / (ll - m)
        pmm, pmmp1 = pmmp1, pll
    return pmmp1


def spherical_harmonic(q: AngularQuantum, theta, phi) -> np.ndarray:
    """
    Orthonormal spherical harmonic Y_lm(theta, phi).

    Args:
        q: Quantum numbers (l, m), l <= MAX_HARMONIC_DEGREE
        theta: Polar angle in radians
        phi: Azimuthal angle in radians

    Returns:
        np.ndarray: Complex harmonic values broadcast over theta and phi

    Raises:
        UnsupportedOrderError: If l exceeds MAX_HARMONIC_DEGREE
    """
    if q.l > MAX_HARMONIC_DEGREE:
        raise UnsupportedOrderError(f"harmonic degree {q.l} above cap {MAX_HARMONIC_DEGREE}")
    m = abs(q.m)
    norm = sqrt((2 * q.l + 1) / (4 * pi) * factorial(q.l - m) / factorial(q.l + m))
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    y = norm * associated_legendre(q.l, m, np.cos(theta)) * np.exp(1j * m * phi)
    if q.m < 0:
        y = (-1) ** m * np.conj(y)
    return y


def harmonic_at_direction(l: int, m: int, direction: np.ndarray) -> np.ndarray:
    """
    Spherical harmonic evaluated at Cartesian unit vectors.

    Args:
        l: Degree
        m: Order
        direction: Array of shape (..., 3) of unit vectors

    Returns:
        np.ndarray: Y_lm at each direction
    """
    direction = np.asarray(direction, dtype=float)
    theta = np.arccos(np.clip(direction[..., 2], -1.0, 1.0))
    phi = np.arctan2(direction[..., 1], direction[..., 0])
    return spherical_harmonic(AngularQuantum(l, m), theta, phi)
