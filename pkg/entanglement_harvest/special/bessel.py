"""
Spherical Bessel functions of the first kind.

Three regimes are used depending on the argument:
the power series below max(0.5, l/2), Miller's downward recurrence up to
x = l, and upward recurrence beyond. The upward branch starts from the closed
forms j_0 = sin x / x and j_1 = sin x / x^2 - cos x / x and only runs to
orders n <= l <= x, where the recurrence does not amplify rounding error.
"""
import numpy as np

from ..errors import UnsupportedOrderError, DomainError

MAX_ORDER = 16
_SERIES_TERMS = 60
_RESCALE = 1e250


def _series(l: int, x: np.ndarray) -> np.ndarray:
    """Power series j_l(x) = x^l/(2l+1)!! * sum_k (-x^2/2)^k / (k! prod_{i=1..k}(2l+2i+1))."""
    double_factorial = 1.0
    for i in range(1, 2 * l + 2, 2):
        double_factorial *= i
    half_sq = -0.5 * x * x
    term = np.ones_like(x)
    total = np.ones_like(x)
    for k in range(1, _SERIES_TERMS):
        term = term * half_sq / (k * (2 * l + 2 * k + 1))
        total = total + term
        if np.all(np.abs(term) <= 1e-17 * np.abs(total)):
            break
    return x ** l / double_factorial * total


def _upward(l: int, x: np.ndarray) -> np.ndarray:
    j_prev = np.sin(x) / x
    if l == 0:
        return j_prev
    j_curr = np.sin(x) / (x * x) - np.cos(x) / x
    for n in range(1, l):
        j_prev, j_curr = j_curr, (2 * n + 1) / x * j_curr - j_prev
    return j_curr


def _miller(l: int, x: np.ndarray) -> np.ndarray:
    start = l + int(np.sqrt(40.0 * (l + 1))) + 20
    j_next = np.zeros_like(x)
    j_curr = np.full_like(x, 1e-30)
    at_order = np.zeros_like(x)
    at_one = np.zeros_like(x)
    for n in range(start, 0, -1):
        # j_{n-1} = (2n+1)/x j_n - j_{n+1}
        j_next, j_curr = j_curr, (2 * n + 1) / x * j_curr - j_next
        if n - 1 == l:
            at_order = j_curr.copy()
        if n - 1 == 1:
            at_one = j_curr.copy()
        big = np.abs(j_curr) > _RESCALE
        if np.any(big):
            scale = np.where(big, 1.0 / _RESCALE, 1.0)
            j_curr = j_curr * scale
            j_next = j_next * scale
            at_order = at_order * scale
            at_one = at_one * scale
    exact_j0 = np.sin(x) / x
    exact_j1 = np.sin(x) / (x * x) - np.cos(x) / x
    use_j0 = np.abs(exact_j0) >= np.abs(exact_j1)
    norm = np.where(use_j0, exact_j0 / j_curr, exact_j1 / at_one)
    return at_order * norm


def spherical_bessel_j(l: int, x) -> np.ndarray:
    """
    Evaluate the spherical Bessel function j_l(x).

    Args:
        l: Non-negative order, at most MAX_ORDER
        x: Real argument, scalar or array

    Returns:
        np.ndarray: j_l(x) with the shape of x (a 0-d array for scalar input)

    Raises:
        UnsupportedOrderError: If l exceeds MAX_ORDER
        DomainError: If l is negative or x is not finite
    """
    if l < 0:
        raise DomainError(f"spherical Bessel order must be non-negative, got {l}")
    if l > MAX_ORDER:
        raise UnsupportedOrderError(f"spherical Bessel order {l} above cap {MAX_ORDER}")
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise DomainError("spherical Bessel argument must be finite")
    ax = np.abs(x)
    out = np.empty_like(ax)
    switch = max(0.5, l / 2.0)
    series = ax < switch
    upward = (~series) & (ax >= l)
    miller = ~(series | upward)
    if np.any(series):
        out[series] = _series(l, ax[series])
    if np.any(upward):
        out[upward] = _upward(l, ax[upward])
    if np.any(miller):
        out[miller] = _miller(l, ax[miller])
    if l % 2 == 1:
        out = np.where(x < 0, -out, out)
    return out
