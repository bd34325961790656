"""
Time-domain evaluation of the time-ordered switching factor Q(k, Omega).

With s = (t + t')/2 and u = t - t' the ordered double integral over t > t'
factorizes into an integral over s on the real line and one over u >= 0.
Both envelopes are Gaussian, so each is cut off where it falls below e^{-144}
and done with QUADPACK's finite-range Fourier-weighted routine.
"""
import math

from scipy import integrate

from ..core.model import SwitchingProfile
from ..errors import DomainError

MAX_ARGUMENT = 12.0
_CUTOFF = 12.0
_EPSREL = 1e-12
_LIMIT = 400
_MAXP1 = 100


def _fourier_half_line(envelope, width: float, frequency: float, weight: str) -> float:
    """Integral of envelope(x) cos or sin(frequency x) over [0, _CUTOFF width]."""
    upper = _CUTOFF * width
    epsabs = 1e-13 * width
    if frequency == 0.0:
        if weight == "sin":
            return 0.0
        value, _ = integrate.quad(envelope, 0.0, upper, epsabs=epsabs, epsrel=_EPSREL, limit=_LIMIT)
        return value
    value, _ = integrate.quad(envelope, 0.0, upper, weight=weight, wvar=frequency,
                              epsabs=epsabs, epsrel=_EPSREL, limit=_LIMIT, maxp1=_MAXP1)
    return value


def q_time_oracle(k: float, omega: float, sw: SwitchingProfile) -> complex:
    """
    Q(k, Omega) from the double time integral of chi(t) chi(t') e^{i(Omega+k)t'} e^{i(Omega-k)t} over t > t'.

    Args:
        k: Momentum magnitude, 0 <= kT <= 12
        omega: Gap, 0 <= Omega T <= 12
        sw: Switching profile

    Returns:
        complex: Q to about 1e-12 T^2 absolute

    Raises:
        DomainError: Outside the supported argument range
    """
    T = sw.T
    for name, value in (("kT", k * T), ("Omega T", omega * T)):
        if not 0.0 <= value <= MAX_ARGUMENT:
            raise DomainError(f"{name} must lie in [0, {MAX_ARGUMENT}], got {value}")

    def centre(s):
        return math.exp(-(s / T) ** 2)

    def relative(u):
        return math.exp(-(u / (2.0 * T)) ** 2)

    # the centre integrand is even in s, so only the cosine part survives
    s_part = 2.0 * _fourier_half_line(centre, T, 2.0 * omega, "cos")
    u_part = complex(_fourier_half_line(relative, 2.0 * T, k, "cos"),
                     -_fourier_half_line(relative, 2.0 * T, k, "sin"))
    return s_part * u_part / (2.0 * math.pi)
