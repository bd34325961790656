"""
Spectral kernel sets: one-dimensional momentum integrands for L and M.

A kernel set is an immutable bundle of vectorized integrands plus the hints
the quadrature needs (damping and oscillation scales, envelope power and an
optional oscillatory tail for integrands without a Gaussian envelope).
"""
import logging
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from ..core.model import DetectorConfig
from ..core.state import TwoDetectorState
from ..errors import UnsupportedScenarioError
from ..integration.gauss_kronrod import (
    QuadratureResult, integrate_interval, integrate_oscillatory_tail, integrate_semi_infinite,
)

logger = logging.getLogger(__name__)

Integrand = Callable[[np.ndarray], np.ndarray]


def zero_integrand(k) -> np.ndarray:
    """The zero function, used when a selection rule removes a term."""
    return np.zeros_like(np.asarray(k, dtype=float))


@dataclass(frozen=True)
class OscillatoryTail:
    """
    Split of an algebraically decaying integrand at k_split.

    Beyond k_split the integrand equals the sum of amplitude(k) e^{i frequency k}
    over `terms`, each amplitude analytic near the real axis.

    Attributes:
        k_split (float): Start of the tail
        terms (Tuple[Tuple[Integrand, float], ...]): (amplitude, frequency) pairs
    """
    k_split: float
    terms: Tuple[Tuple[Integrand, float], ...]


@dataclass(frozen=True)
class SpectralKernelSet:
    """
    Integrands whose integrals over k in [0, inf) give L and M.

    Attributes:
        L_integrand (Integrand): Real, non-negative, all prefactors included
        M_integrand (Integrand): Complex
        scenario_tag (str): Identifier of the kernel family
        prefactor_units (str): Short description of the folded prefactor
        damping_scale (float): Gaussian envelope scale used for truncation
        oscillation_scale (float): Largest oscillation frequency of M
        envelope_power (float): Polynomial degree multiplying the envelope
        LAB_integrand (Optional[Integrand]): Cross-correlation integrand, when reducible
        m_tail (Optional[OscillatoryTail]): Tail description for M without an envelope
        m_identically_zero (bool): M vanishes by a selection rule
        l_identically_zero (bool): L vanishes by a selection rule
    """
    L_integrand: Integrand
    M_integrand: Integrand
    scenario_tag: str
    prefactor_units: str
    damping_scale: float
    oscillation_scale: float = 0.0
    envelope_power: float = 0.0
    LAB_integrand: Optional[Integrand] = None
    m_tail: Optional[OscillatoryTail] = None
    m_identically_zero: bool = False
    l_identically_zero: bool = False


@dataclass(frozen=True)
class KernelIntegrals:
    """
    Integrated kernel values.

    Attributes:
        L (float): Excitation probability of either detector
        M (complex): Non-local term
        L_AB (complex): Cross correlation, zero when no reduced integrand exists
        L_error (float): Error estimate of L
        M_error (float): Error estimate of M
    """
    L: float
    M: complex
    L_AB: complex
    L_error: float
    M_error: float


_ZERO = QuadratureResult(0j, 0.0, 0, 0.0)


def _integrate_m(kset: SpectralKernelSet, rel_tol: float, abs_tol: float) -> QuadratureResult:
    if kset.m_identically_zero:
        return _ZERO
    if kset.m_tail is None:
        return integrate_semi_infinite(kset.M_integrand, kset.damping_scale, kset.oscillation_scale,
                                       rel_tol, abs_tol, kset.envelope_power)
    tail = kset.m_tail
    result = integrate_interval(kset.M_integrand, 0.0, tail.k_split, kset.oscillation_scale,
                                kset.damping_scale, rel_tol, abs_tol)
    # the tail is small next to the head; give it a share of the head's tolerance
    tail_abs = max(abs_tol, rel_tol * abs(result.value) / (4.0 * len(tail.terms)))
    for amplitude, frequency in tail.terms:
        result = result + integrate_oscillatory_tail(amplitude, tail.k_split, frequency,
                                                     rel_tol, tail_abs)
    logger.debug("%s: M head/tail split at k=%.4g", kset.scenario_tag, tail.k_split)
    return result


def integrate_kernels(kset: SpectralKernelSet, rel_tol: float = 1e-8,
                      abs_tol: float = 1e-300) -> KernelIntegrals:
    """
    Integrate a kernel set.

    Args:
        kset: Kernel set
        rel_tol: Relative tolerance of each integral
        abs_tol: Absolute floor

    Returns:
        KernelIntegrals: L, M and L_AB with error estimates

    Raises:
        ConvergenceError: If a quadrature does not converge
    """
    if kset.l_identically_zero:
        l_result = _ZERO
    else:
        l_result = integrate_semi_infinite(kset.L_integrand, kset.damping_scale, 0.0,
                                           rel_tol, abs_tol, kset.envelope_power)
    m_result = _integrate_m(kset, rel_tol, abs_tol)
    lab = 0j
    if kset.LAB_integrand is not None:
        lab = integrate_semi_infinite(kset.LAB_integrand, kset.damping_scale,
                                      kset.oscillation_scale, rel_tol, abs_tol,
                                      kset.envelope_power).value
    return KernelIntegrals(
        L=float(l_result.value.real),
        M=complex(m_result.value),
        L_AB=complex(lab),
        L_error=l_result.abs_error_estimate,
        M_error=m_result.abs_error_estimate,
    )


def state_from_kernels(integrals: KernelIntegrals) -> TwoDetectorState:
    """Two-detector state of an identical pair."""
    return TwoDetectorState(L_AA=integrals.L, L_BB=integrals.L, M=integrals.M, L_AB=integrals.L_AB)


def require_identical_pair(A: DetectorConfig, B: DetectorConfig) -> None:
    """
    Check that the two detectors differ at most by placement.

    Raises:
        UnsupportedScenarioError: On different gaps, couplings, switchings or smearings
    """
    if A.gap != B.gap:
        raise UnsupportedScenarioError(f"detectors need identical gaps, got {A.gap} and {B.gap}")
    if A.lam != B.lam:
        raise UnsupportedScenarioError(f"detectors need identical couplings, got {A.lam} and {B.lam}")
    if A.switching != B.switching:
        raise UnsupportedScenarioError("detectors need identical switching profiles")
    if A.smearing != B.smearing:
        raise UnsupportedScenarioError("detectors need identical smearing profiles")


def require_smearing(A: DetectorConfig, family: type, tag: str) -> None:
    """Raise UnsupportedScenarioError unless A's smearing is of `family`."""
    if not isinstance(A.smearing, family):
        raise UnsupportedScenarioError(
            f"{tag} kernels need {family.__name__} smearing, got {type(A.smearing).__name__}")

