"""
Associated Laguerre polynomials and hydrogen bound-state radial functions.
"""
from math import factorial, sqrt

import numpy as np

from ..errors import DomainError, UnsupportedOrderError

MAX_PRINCIPAL = 8


def associated_laguerre(n: int, alpha: float, x) -> np.ndarray:
    """
    Generalized Laguerre polynomial L_n^alpha(x) by the three-term recurrence.

    Args:
        n: Degree, non-negative
        alpha: Order parameter
        x: Argument

    Returns:
        np.ndarray: L_n^alpha(x)
    """
    if n < 0:
        raise DomainError(f"Laguerre degree must be non-negative, got {n}")
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return prev
    curr = 1.0 + alpha - x
    for k in range(1, n):
        prev, curr = curr, ((2 * k + 1 + alpha - x) * curr - (k + alpha) * prev) / (k + 1)
    return curr


def hydrogen_radial(n: int, l: int, r, a0: float, printed_variant: bool = False) -> np.ndarray:
    """
    Hydrogen radial function R_nl(r).

    The standard form uses e^{-r/(n a0)} and the Laguerre argument 2r/(n a0),
    normalized so that the integral of r^2 R_nl^2 is one. With
    printed_variant the exponent is e^{-r/(2 a0)} and the argument r/a0 while
    the prefactor is kept; that variant is only normalized for n = 2.

    Args:
        n: Principal quantum number, 1 <= n <= MAX_PRINCIPAL
        l: Orbital quantum number, 0 <= l <= n - 1
        r: Radius, non-negative
        a0: Bohr radius, positive
        printed_variant: Use the alternative exponent and argument

    Returns:
        np.ndarray: R_nl(r) in units of a0^{-3/2}
    """
    if n < 1 or l < 0 or l > n - 1:
        raise DomainError(f"invalid hydrogen quantum numbers n={n}, l={l}")
    if n > MAX_PRINCIPAL:
        raise UnsupportedOrderError(f"principal quantum number {n} above cap {MAX_PRINCIPAL}")
    if a0 <= 0:
        raise DomainError(f"Bohr radius must be positive, got {a0}")
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise DomainError("radius must be non-negative")
    norm = (2.0 / (n * a0)) ** 1.5 * sqrt(factorial(n - l - 1) / (2 * n * factorial(n + l)))
    if printed_variant:
        rho = r / a0
        decay = np.exp(-r / (2.0 * a0))
    else:
        rho = 2.0 * r / (n * a0)
        decay = np.exp(-0.5 * rho)
    return norm * decay * rho ** l * associated_laguerre(n - l - 1, 2 * l + 1, rho)
