"""
Exact-arithmetic Wigner 3j symbols for cross-checking the floating-point ones.
"""
from decimal import Decimal, localcontext
from fractions import Fraction
from math import factorial
from typing import Tuple

from ..errors import DomainError


def _signed_square(l1: int, l2: int, l3: int, m1: int, m2: int, m3: int) -> Tuple[int, Fraction]:
    if min(l1, l2, l3) < 0:
        raise DomainError("3j degrees must be non-negative")
    if m1 + m2 + m3 != 0 or abs(m1) > l1 or abs(m2) > l2 or abs(m3) > l3:
        return 0, Fraction(0)
    if l3 < abs(l1 - l2) or l3 > l1 + l2:
        return 0, Fraction(0)
    triangle = Fraction(factorial(l1 + l2 - l3) * factorial(l1 - l2 + l3) * factorial(-l1 + l2 + l3),
                        factorial(l1 + l2 + l3 + 1))
    radicand = triangle * (factorial(l1 + m1) * factorial(l1 - m1) * factorial(l2 + m2)
                           * factorial(l2 - m2) * factorial(l3 + m3) * factorial(l3 - m3))
    t_min = max(0, l2 - l3 - m1, l1 - l3 + m2)
    t_max = min(l1 + l2 - l3, l1 - m1, l2 + m2)
    total = Fraction(0)
    for t in range(t_min, t_max + 1):
        denom = (factorial(t) * factorial(l3 - l2 + t + m1) * factorial(l3 - l1 + t - m2)
                 * factorial(l1 + l2 - l3 - t) * factorial(l1 - t - m1) * factorial(l2 - t + m2))
        total += Fraction((-1) ** t, denom)
    if total == 0:
        return 0, Fraction(0)
    sign = (-1) ** ((l1 - l2 - m3) % 2) * (1 if total > 0 else -1)
    return sign, radicand * total * total


def racah_3j_squared(l1: int, l2: int, l3: int, m1: int, m2: int, m3: int) -> Fraction:
    """Signed square sign(3j) * (3j)^2 as an exact rational."""
    sign, square = _signed_square(l1, l2, l3, m1, m2, m3)
    return sign * square


def racah_3j_exact(l1: int, l2: int, l3: int, m1: int, m2: int, m3: int) -> float:
    """
    3j symbol from the Racah sum in exact rational arithmetic.

    Only the final square root is taken in 40-digit decimal arithmetic.
    """
    sign, square = _signed_square(l1, l2, l3, m1, m2, m3)
    if sign == 0:
        return 0.0
    with localcontext() as ctx:
        ctx.prec = 40
        root = (Decimal(square.numerator) / Decimal(square.denominator)).sqrt()
    return float(sign * root)
