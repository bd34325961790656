"""
Kernels built from a radial wavefunction product: the general l_g = 0
reduction and the hydrogen 1s -> 3d (m = 0) closed form.
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ..core.model import (
    CouplingModel, DetectorConfig, HydrogenTransition, PairGeometry, chi_tilde_sq, q_factor,
)
from ..errors import UnsupportedScenarioError
from ..oracle.momentum import MomentumOracle, helicity_fraction
from ..oracle.transforms import radial_grid
from ..special.bessel import spherical_bessel_j
from ..special.erfi import dawson_asymptotic
from ..special.harmonics import AngularQuantum
from ..special.wigner import wigner_D
from .base import OscillatoryTail, SpectralKernelSet, require_identical_pair, zero_integrand
from .scalar import angle_factor

logger = logging.getLogger(__name__)

PI = math.pi
TAIL_EPS = 1e-12
NULL_THRESHOLD = 1e-20


def quadrupole_geometry(x):
    """7 j_0(x) + 10 j_2(x)."""
    x = np.asarray(x, dtype=float)
    return 7.0 * spherical_bessel_j(0, x) + 10.0 * spherical_bessel_j(2, x)


@dataclass(frozen=True)
class RadialProduct:
    """
    Smearing R(r) Y_lm Y*_00 described by a radial product function.

    Attributes:
        rprod (Callable): R_excited(r) R_ground(r)
        q (AngularQuantum): Excited-state angular quantum numbers
        extent (float): Radius beyond which rprod is negligible
    """
    rprod: Callable
    q: AngularQuantum
    extent: float

    @property
    def angular(self) -> AngularQuantum:
        return self.q

    def radial_profile(self, r) -> np.ndarray:
        return np.asarray(self.rprod(r), dtype=float) / math.sqrt(4.0 * PI)

    def radial_extent(self) -> float:
        return self.extent


def _default_damping(det: DetectorConfig) -> float:
    sigma = getattr(det.smearing, "sigma", None)
    return sigma if sigma is not None else det.switching.T


def _radial_transform(rprod: Callable, extent: float) -> Callable:
    nodes, weights = radial_grid(extent)
    measure = weights * nodes ** 4 * np.asarray(rprod(nodes), dtype=float)

    def W(k):
        k = np.asarray(k, dtype=float)
        flat = k.ravel()
        return (quadrupole_geometry(np.outer(flat, nodes)) @ measure).reshape(k.shape)

    return W


def _l2_kernels(rprod: Callable, A: DetectorConfig, geo: PairGeometry, extent: float,
                damping_scale: float) -> SpectralKernelSet:
    W = _radial_transform(rprod, extent)
    omega, sw, sep = A.gap, A.switching, geo.L
    lam2 = A.lam ** 2
    # both orderings of the detectors give the same D^2_00 since it is even in vartheta
    d00 = float(np.real(wigner_D(2, 0, 0, *geo.euler)))

    def L_integrand(k):
        k = np.asarray(k, dtype=float)
        return lam2 / (14700.0 * PI ** 2) * k ** 5 * chi_tilde_sq(k + omega, sw) * W(k) ** 2

    def M_integrand(k):
        k = np.asarray(k, dtype=float)
        return (-2.0 * lam2 / (102900.0 * PI ** 2) * d00 * k ** 5 * q_factor(k, omega, sw)
                * quadrupole_geometry(k * sep) * W(k) ** 2)

    return SpectralKernelSet(
        L_integrand=L_integrand,
        M_integrand=M_integrand,
        scenario_tag="general-radial-l2",
        prefactor_units="lambda^2 / (14700 pi^2) with W(k)^2; M with Q(k, Omega) D^2_00",
        damping_scale=damping_scale,
        oscillation_scale=sep,
        envelope_power=9.0,
    )


def _angular_route(rprod: Callable, lq: AngularQuantum, A: DetectorConfig, B: DetectorConfig,
                   geo: PairGeometry, extent: float, damping_scale: float) -> SpectralKernelSet:
    proxy = RadialProduct(rprod, lq, extent)
    probe = np.array([0.25, 0.5, 1.0, 2.0, 4.0]) * 14.0 / extent
    fraction = helicity_fraction(proxy, probe)
    tag = f"general-radial-l{lq.l}"
    if fraction < NULL_THRESHOLD:
        logger.info("%s: transverse-traceless projection vanishes (fraction %.2e)", tag, fraction)
        return SpectralKernelSet(
            L_integrand=zero_integrand,
            M_integrand=zero_integrand,
            scenario_tag=f"{tag}-null",
            prefactor_units="identically zero by helicity-two selection",
            damping_scale=damping_scale,
            oscillation_scale=geo.L,
            m_identically_zero=True,
            l_identically_zero=True,
        )
    placed_A = DetectorConfig(A.lam, A.gap, proxy, A.switching)
    placed_B = DetectorConfig(B.lam, B.gap, proxy, B.switching)
    oracle = MomentumOracle(CouplingModel.GRAVITY_QUADRUPOLE, placed_A, placed_B, geo)
    l_oracle = oracle.l_integrand("AA")

    def L_integrand(k):
        return np.real(l_oracle(k))

    m_zero = lq.l == 1
    return SpectralKernelSet(
        L_integrand=L_integrand,
        M_integrand=zero_integrand if m_zero else oracle.m_integrand(),
        scenario_tag=tag,
        prefactor_units="full angular quadrature",
        damping_scale=damping_scale,
        oscillation_scale=geo.L,
        envelope_power=9.0,
        m_identically_zero=m_zero,
    )


def general_radial_kernels(Rprod: Callable, lq: AngularQuantum, A: DetectorConfig,
                           B: DetectorConfig, geo: PairGeometry, extent: Optional[float] = None,
                           damping_scale: Optional[float] = None) -> SpectralKernelSet:
    """
    Gravitational kernels for a ground l = 0 state and an excited state with radial product Rprod.

    For l_e = 2, m_e = 0 the reduced form with
    W(k) = integral of x^4 R(x) (7 j_0(kx) + 10 j_2(kx)) dx is used. For
    l_e in {0, 1} the kernels come from the angular quadrature of the
    momentum-space integrand; a probe of the transverse-traceless content
    turns them into the zero function when the projection vanishes.

    Args:
        Rprod: Vectorized radial product R_e(r) R_g(r)
        lq: Excited-state angular quantum numbers
        A: First detector
        B: Second detector, identical to A up to placement
        geo: Pair geometry
        extent: Radial integration limit, from A's smearing when omitted
        damping_scale: Quadrature damping hint, from A's smearing when omitted

    Returns:
        SpectralKernelSet: L and M integrands

    Raises:
        UnsupportedScenarioError: For l_e > 2 or l_e = 2 with m_e != 0

    Without a Gaussian factor in Rprod the M integrand decays only
    algebraically and integrate_kernels raises ConvergenceError.
    """
    require_identical_pair(A, B)
    if lq.l > 2:
        raise UnsupportedScenarioError(f"excited states above l = 2 are not supported, got l = {lq.l}")
    extent = extent if extent is not None else A.smearing.radial_extent()
    damping = damping_scale if damping_scale is not None else _default_damping(A)
    if lq.l == 2:
        if lq.m != 0:
            raise UnsupportedScenarioError("the reduced l = 2 kernels need m = 0")
        return _l2_kernels(Rprod, A, geo, extent, damping)
    return _angular_route(Rprod, lq, A, B, geo, extent, damping)


def hydrogen_profile(k, sigma: float):
    """(729 u^4 - 2016 u^2 - 1792)^2 / (9 u^2 + 16)^12 with u = k sigma; accepts complex k."""
    u2 = (k * sigma) ** 2
    return (729.0 * u2 * u2 - 2016.0 * u2 - 1792.0) ** 2 / (9.0 * u2 + 16.0) ** 12


def hydrogen_320_kernels(A: DetectorConfig, B: DetectorConfig, geo: PairGeometry,
                         sigma_scale: float = 1.0) -> SpectralKernelSet:
    """
    Gravitational kernels for the hydrogen 1s -> 3d (m = 0) transition.

    The length scale is sigma = sigma_scale * a0. The M integrand has no
    Gaussian envelope, so its integral is split at
    k_s = max(Omega + 8/T, 8/T, 2 ln(1/eps)/L); beyond k_s the Bessel factor
    is written as two exponentials e^{+-ikL} and Q in its asymptotic form,
    and each term is integrated along a rotated contour.

    Raises:
        UnsupportedScenarioError: For any other transition
    """
    require_identical_pair(A, B)
    smearing = A.smearing
    if not isinstance(smearing, HydrogenTransition) or smearing.ground != (1, 0, 0) \
            or smearing.excited != (3, 2, 0):
        raise UnsupportedScenarioError("hydrogen-320 kernels need the (1,0,0) -> (3,2,0) transition")
    sigma = sigma_scale * smearing.a0
    omega, sw, sep = A.gap, A.switching, geo.L
    T = sw.T
    lam2 = A.lam ** 2
    l_const = 214990848.0 * lam2 * sigma ** 4 / (245.0 * PI ** 2)
    m_const = -107495424.0 * lam2 * sigma ** 4 / (1715.0 * PI ** 2) * angle_factor(geo.vartheta)

    def L_integrand(k):
        k = np.asarray(k, dtype=float)
        return l_const * k ** 5 * hydrogen_profile(k, sigma) * chi_tilde_sq(k + omega, sw)

    def M_integrand(k):
        k = np.asarray(k, dtype=float)
        return (m_const * k ** 5 * q_factor(k, omega, sw) * quadrupole_geometry(k * sep)
                * hydrogen_profile(k, sigma))

    q_scale = -1j * T ** 2 / math.sqrt(PI) * math.exp(-(T * omega) ** 2)

    def common(k):
        return m_const * k ** 5 * q_scale * dawson_asymptotic(k * T) * hydrogen_profile(k, sigma)

    k_split = max(omega + 8.0 / T, 8.0 / T)
    if sep > 0:
        k_split = max(k_split, 2.0 * math.log(1.0 / TAIL_EPS) / sep)

        def outgoing(k):
            x = k * sep
            s = 30.0 / x ** 3 - 3.0 / x
            return common(k) * (s / 2j - 15.0 / x ** 2)

        def incoming(k):
            x = k * sep
            s = 30.0 / x ** 3 - 3.0 / x
            return common(k) * (-s / 2j - 15.0 / x ** 2)

        terms = ((outgoing, sep), (incoming, -sep))
    else:
        def coincident(k):
            return 7.0 * common(k)

        terms = ((coincident, 0.0),)

    return SpectralKernelSet(
        L_integrand=L_integrand,
        M_integrand=M_integrand,
        scenario_tag="hydrogen-320",
        prefactor_units="214990848 lambda^2 T^2 sigma^4 / (245 pi^2); M with Q(k, Omega)",
        damping_scale=T,
        oscillation_scale=sep,
        envelope_power=5.0,
        m_tail=OscillatoryTail(k_split, terms),
    )
