"""
Panelled Gauss-Kronrod (7/15) quadrature for Gaussian-damped oscillatory integrands.

Integrands are vectorized callables k -> array (real or complex). Every
panel is evaluated with the same 15 nodes, so one call of the integrand
covers a whole batch of panels. Panels are kept sorted by their left edge
and summed in that order, so results do not depend on refinement history.
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from ..errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

MAX_PANELS = 2 ** 16
TAIL_FACTOR = 1e-4
_CERTIFICATE_EXTENSIONS = 8
_EPMACH = np.finfo(float).eps
_UFLOW = np.finfo(float).tiny

# Kronrod abscissae on [0, 1] (descending) and weights; Gauss weights belong
# to the odd-indexed abscissae.
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.0,
    0.129484966168869693270611432679082,
    0.0,
    0.279705391489276667901467771423780,
    0.0,
    0.381830050505118944950369775488975,
    0.0,
    0.417959183673469387755102040816327,
])

NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
GAUSS_WEIGHTS = np.concatenate([_WG[:-1], _WG[::-1]])


Integrand = Callable[[np.ndarray], np.ndarray]


@dataclass
class QuadratureResult:
    """
    Outcome of a quadrature call.

    Attributes:
        value (complex): Integral estimate
        abs_error_estimate (float): Estimated absolute error
        panels_used (int): Number of Kronrod panels evaluated in the final partition
        truncation_k (float): Upper end of the integrated range
    """
    value: complex
    abs_error_estimate: float
    panels_used: int
    truncation_k: float

    def __add__(self, other: "QuadratureResult") -> "QuadratureResult":
        return QuadratureResult(
            value=self.value + other.value,
            abs_error_estimate=self.abs_error_estimate + other.abs_error_estimate,
            panels_used=self.panels_used + other.panels_used,
            truncation_k=max(self.truncation_k, other.truncation_k),
        )

    def scaled(self, factor: complex) -> "QuadratureResult":
        """Return a copy multiplied by a constant factor."""
        return QuadratureResult(
            value=factor * self.value,
            abs_error_estimate=abs(factor) * self.abs_error_estimate,
            panels_used=self.panels_used,
            truncation_k=self.truncation_k,
        )


def _component_error(fvals: np.ndarray, half: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """QUADPACK-style error estimate for one real component, per panel."""
    resk = fvals @ KRONROD_WEIGHTS
    resg = fvals @ GAUSS_WEIGHTS
    resabs = np.abs(fvals) @ KRONROD_WEIGHTS * half
    resasc = np.abs(fvals - 0.5 * resk[:, None]) @ KRONROD_WEIGHTS * half
    err = np.abs((resk - resg) * half)
    safe = np.where(resasc > 0, resasc, 1.0)
    scaled = resasc * np.minimum(1.0, (200.0 * err / safe) ** 1.5)
    err = np.where((resasc > 0) & (err > 0), scaled, err)
    floor = 50.0 * _EPMACH * resabs
    err = np.where(resabs > _UFLOW / (50.0 * _EPMACH), np.maximum(floor, err), err)
    return err, floor


def _evaluate_panels(f: Integrand, left: np.ndarray, right: np.ndarray):
    half = 0.5 * (right - left)
    centre = 0.5 * (right + left)
    points = centre[:, None] + half[:, None] * NODES[None, :]
    fvals = np.asarray(f(points.ravel())).reshape(points.shape)
    values = (fvals @ KRONROD_WEIGHTS) * half
    if np.iscomplexobj(fvals):
        err_re, floor_re = _component_error(fvals.real, half)
        err_im, floor_im = _component_error(fvals.imag, half)
        return values, err_re + err_im, floor_re + floor_im
    err, floor = _component_error(fvals, half)
    return values, err, floor


def _initial_panels(a: float, b: float, oscillation_scale: float, damping_scale: float) -> int:
    scale = max(oscillation_scale, damping_scale)
    if scale <= 0:
        return 1
    return max(1, int(math.ceil((b - a) * 4.0 * scale / math.pi)))


def integrate_interval(f: Integrand, a: float, b: float, oscillation_scale: float = 0.0,
                       damping_scale: float = 0.0, rel_tol: float = 1e-8,
                       abs_tol: float = 1e-300, max_panels: int = MAX_PANELS) -> QuadratureResult:
    """
    Adaptive panelled Gauss-Kronrod quadrature over a finite interval.

    The interval is first cut into panels no wider than
    pi / (4 max(oscillation_scale, damping_scale)); panels whose error
    exceeds their share of the tolerance are bisected until the summed
    error is below max(rel_tol |value|, abs_tol).

    Args:
        f: Vectorized integrand
        a: Lower limit
        b: Upper limit, b > a
        oscillation_scale: Largest oscillation frequency of the integrand
        damping_scale: Gaussian envelope scale
        rel_tol: Relative tolerance
        abs_tol: Absolute floor on the tolerance
        max_panels: Panel cap

    Returns:
        QuadratureResult: Value, error estimate and panel count

    Raises:
        ConvergenceError: If the panel cap is reached first
    """
    if not b > a:
        raise DomainError(f"integration interval must satisfy b > a, got [{a}, {b}]")
    n0 = min(_initial_panels(a, b, oscillation_scale, damping_scale), max_panels)
    edges = np.linspace(a, b, n0 + 1)
    left, right = edges[:-1], edges[1:]
    values, errors, floors = _evaluate_panels(f, left, right)
    width = b - a

    while True:
        total = values.sum()
        err = float(errors.sum())
        target = max(rel_tol * abs(total), abs_tol)
        if err <= target:
            break
        if err <= 2.0 * float(floors.sum()):
            logger.debug("quadrature on [%g, %g] limited by round-off (err %.3e)", a, b, err)
            break
        if left.size >= max_panels:
            partial = QuadratureResult(complex(total), err, int(left.size), float(b))
            raise ConvergenceError(
                f"panel cap {max_panels} reached on [{a}, {b}] with error {err:.3e} > {target:.3e}",
                partial=partial,
            )
        budget = target * (right - left) / width
        split = errors > budget
        room = max_panels - left.size
        if split.sum() > room:
            order = np.argsort(-errors, kind="stable")[:room]
            split = np.zeros_like(split)
            split[order] = True
        if not split.any():
            split[int(np.argmax(errors))] = True
        mid = 0.5 * (left[split] + right[split])
        new_left = np.concatenate([left[split], mid])
        new_right = np.concatenate([mid, right[split]])
        new_values, new_errors, new_floors = _evaluate_panels(f, new_left, new_right)
        keep = ~split
        left = np.concatenate([left[keep], new_left])
        right = np.concatenate([right[keep], new_right])
        values = np.concatenate([values[keep], new_values])
        errors = np.concatenate([errors[keep], new_errors])
        floors = np.concatenate([floors[keep], new_floors])
        order = np.argsort(left, kind="stable")
        left, right = left[order], right[order]
        values, errors, floors = values[order], errors[order], floors[order]

    value = values.sum()
    return QuadratureResult(complex(value), float(errors.sum()), int(left.size), float(b))


def truncation_point(damping_scale: float, rel_tol: float, envelope_power: float = 0.0) -> float:
    """
    Cutoff k_max for a k^p e^{-k^2 s^2} envelope.

    Returns:
        float: sqrt(p/2)/s + sqrt(ln(1/eps_tail))/s with eps_tail = rel_tol * TAIL_FACTOR
    """
    eps_tail = rel_tol * TAIL_FACTOR
    peak = math.sqrt(max(envelope_power, 0.0) / 2.0) / damping_scale
    return peak + math.sqrt(math.log(1.0 / eps_tail)) / damping_scale


def integrate_semi_infinite(f: Integrand, damping_scale: float, oscillation_scale: float = 0.0,
                            rel_tol: float = 1e-8, abs_tol: float = 1e-300,
                            envelope_power: float = 0.0,
                            max_panels: int = MAX_PANELS) -> QuadratureResult:
    """
    Integrate f over [0, inf) for a Gaussian-damped, possibly oscillating integrand.

    The range is truncated at truncation_point(); the truncation is accepted
    only when max|f| near k_max times k_max is below
    max(eps_tail |value|, abs_tol). Otherwise the range is extended by
    doubling.

    Args:
        f: Vectorized integrand
        damping_scale: Scale s of the e^{-k^2 s^2} envelope, positive
        oscillation_scale: Largest oscillation frequency, non-negative
        rel_tol: Relative tolerance in (0, 1e-3]
        abs_tol: Absolute floor
        envelope_power: Polynomial degree multiplying the envelope
        max_panels: Panel cap for each sub-range

    Returns:
        QuadratureResult: Integral estimate with truncation_k set to the accepted cutoff

    Raises:
        DomainError: For invalid scales or tolerance
        ConvergenceError: If the panel cap or the extension limit is reached
    """
    if not damping_scale > 0:
        raise DomainError(f"damping_scale must be positive, got {damping_scale}")
    if oscillation_scale < 0:
        raise DomainError(f"oscillation_scale must be non-negative, got {oscillation_scale}")
    if not 0 < rel_tol <= 1e-3:
        raise DomainError(f"rel_tol must lie in (0, 1e-3], got {rel_tol}")
    eps_tail = rel_tol * TAIL_FACTOR
    k_max = truncation_point(damping_scale, rel_tol, envelope_power)
    result = integrate_interval(f, 0.0, k_max, oscillation_scale, damping_scale,
                                rel_tol, abs_tol, max_panels)
    for _ in range(_CERTIFICATE_EXTENSIONS):
        probe = k_max * np.array([0.96, 0.98, 0.99, 1.0])
        bound = float(np.max(np.abs(f(probe)))) * k_max
        if bound <= max(eps_tail * abs(result.value), abs_tol):
            logger.debug("semi-infinite integral accepted at k_max=%.4g with %d panels",
                         k_max, result.panels_used)
            return result
        logger.warning("truncation certificate failed at k_max=%.4g (bound %.3e); extending",
                       k_max, bound)
        result = result + integrate_interval(f, k_max, 2.0 * k_max, oscillation_scale,
                                             damping_scale, rel_tol, abs_tol, max_panels)
        k_max *= 2.0
    raise ConvergenceError(f"truncation certificate never satisfied up to k_max={k_max:.4g}",
                           partial=result)


def integrate_oscillatory_tail(amplitude: Integrand, k_start: float, frequency: float,
                               rel_tol: float = 1e-8, abs_tol: float = 1e-300) -> QuadratureResult:
    """
    Integral of amplitude(k) e^{i frequency k} over [k_start, inf).

    amplitude must be analytic in the quarter plane swept when the ray is
    rotated towards decaying exponentials, and algebraically bounded there.
    With a non-zero frequency the path k = k_start + i sign(frequency) t is
    used; with zero frequency the substitution k = k_start / u maps the tail
    onto (0, 1].

    Args:
        amplitude: Vectorized analytic amplitude accepting complex k
        k_start: Start of the tail, positive
        frequency: Real oscillation frequency
        rel_tol: Relative tolerance
        abs_tol: Absolute floor

    Returns:
        QuadratureResult: Tail integral
    """
    if not k_start > 0:
        raise DomainError(f"tail must start at positive k, got {k_start}")
    if frequency == 0.0:
        def mapped(u):
            return amplitude(k_start / u) * k_start / (u * u)
        return integrate_interval(mapped, 0.0, 1.0, rel_tol=rel_tol, abs_tol=abs_tol)
    sign = 1.0 if frequency > 0 else -1.0
    decay = abs(frequency)

    def along_contour(t):
        return amplitude(k_start + 1j * sign * t) * np.exp(-decay * t)

    damping = decay / math.sqrt(math.log(1.0 / (rel_tol * TAIL_FACTOR)))
    inner = integrate_semi_infinite(along_contour, damping, 0.0, rel_tol, abs_tol)
    phase = 1j * sign * np.exp(1j * frequency * k_start)
    return inner.scaled(complex(phase))
