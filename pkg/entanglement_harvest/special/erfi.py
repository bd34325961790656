"""
Dawson's integral and the damped (1 - erf(ix)) factor of the switching kernel.

erfi is never formed on its own: every caller needs e^{-g}(1 - erf(ix)),
whose imaginary part is -(2/sqrt(pi)) e^{x^2 - g} D(x). Combining the
exponent before exponentiating keeps the product finite for large x.
"""
import numpy as np

from ..errors import DomainError

_H = 0.2
_TERMS = 20
_TAYLOR_CUTOFF = 0.5
_ASYMPTOTIC_TERMS = 30
_INV_SQRT_PI = 1.0 / np.sqrt(np.pi)
_RYBICKI_COEFFS = np.exp(-((2 * np.arange(_TERMS) + 1) * _H) ** 2)


def _dawson_taylor(x: np.ndarray) -> np.ndarray:
    # D(x) = sum_n (-1)^n 2^n x^{2n+1} / (2n+1)!!
    term = x.copy()
    total = x.copy()
    x2 = x * x
    for n in range(1, 25):
        term = -term * 2.0 * x2 / (2 * n + 1)
        total = total + term
    return total


def _dawson_rybicki(x: np.ndarray) -> np.ndarray:
    ax = np.abs(x)
    n0 = 2.0 * np.round(0.5 * ax / _H)
    xp = ax - n0 * _H
    e1 = np.exp(2.0 * xp * _H)
    e2 = e1 * e1
    d1 = n0 + 1.0
    d2 = d1 - 2.0
    total = np.zeros_like(ax)
    for c in _RYBICKI_COEFFS:
        total = total + c * (e1 / d1 + 1.0 / (d2 * e1))
        d1 = d1 + 2.0
        d2 = d2 - 2.0
        e1 = e1 * e2
    return _INV_SQRT_PI * np.sign(x) * np.exp(-xp * xp) * total


def dawson(x) -> np.ndarray:
    """
    Dawson's integral D(x) = e^{-x^2} * integral_0^x e^{t^2} dt for real x.

    Uses a Taylor series near the origin and Rybicki's sampling series
    (step 0.2) elsewhere.

    Args:
        x: Real argument, scalar or array

    Returns:
        np.ndarray: D(x)
    """
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    small = np.abs(x) < _TAYLOR_CUTOFF
    if np.any(small):
        out[small] = _dawson_taylor(x[small])
    if np.any(~small):
        out[~small] = _dawson_rybicki(x[~small])
    return out


def dawson_asymptotic(z) -> np.ndarray:
    """
    Asymptotic series D(z) ~ sum_n (2n-1)!! / (2^{n+1} z^{2n+1}).

    The truncated series is a rational function of z, so it may be continued
    onto rotated integration contours. It agrees with D on the real axis to
    double precision for |z| >= 8.

    Args:
        z: Complex argument with |z| >= 8

    Returns:
        np.ndarray: Complex series value
    """
    z = np.asarray(z, dtype=complex)
    inv_z2 = 1.0 / (z * z)
    term = 0.5 / z
    total = term.copy()
    for n in range(1, _ASYMPTOTIC_TERMS):
        term = term * (2 * n - 1) * 0.5 * inv_z2
        total = total + term
    return total


def one_minus_erf_i_damped(x, g) -> np.ndarray:
    """
    Fused evaluation of e^{-g} (1 - erf(i x)).

    Args:
        x: Non-negative real argument
        g: Non-negative damping exponent

    Returns:
        np.ndarray: Complex value e^{-g} - i (2/sqrt(pi)) e^{x^2 - g} D(x)

    Raises:
        DomainError: If x or g is negative
    """
    x = np.asarray(x, dtype=float)
    g = np.asarray(g, dtype=float)
    if np.any(x < 0) or np.any(g < 0):
        raise DomainError("one_minus_erf_i_damped requires x >= 0 and g >= 0")
    imag = -2.0 * _INV_SQRT_PI * np.exp(x * x - g) * dawson(x)
    return np.exp(-g) + 1j * imag
