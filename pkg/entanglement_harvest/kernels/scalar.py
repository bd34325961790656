"""
Kernels for detectors coupled linearly to a scalar field or to its second
time derivative through an |x|^2 weighted smearing.
"""
import math

import numpy as np

from ..core.model import (
    DetectorConfig, GaussianHarmonic, GaussianIsotropic, PairGeometry, chi_tilde_sq, q_factor,
)
from ..errors import UnsupportedScenarioError
from ..special.bessel import spherical_bessel_j
from ..special.harmonics import AngularQuantum
from .base import SpectralKernelSet, require_identical_pair, require_smearing

PI = math.pi


def angle_factor(vartheta: float) -> float:
    """Orientation factor 1 + 3 cos(2 vartheta) of the l = 2, m = 0 kernels."""
    return 1.0 + 3.0 * math.cos(2.0 * vartheta)


def scalar_kernels(A: DetectorConfig, B: DetectorConfig, geo: PairGeometry) -> SpectralKernelSet:
    """
    Linear scalar coupling with Gaussian smearings.

    Args:
        A: First detector
        B: Second detector, identical to A up to placement
        geo: Pair geometry

    Returns:
        SpectralKernelSet: L, M and L_AB integrands

    Raises:
        UnsupportedScenarioError: For mismatched detectors or non-Gaussian smearing
    """
    require_identical_pair(A, B)
    require_smearing(A, GaussianIsotropic, "scalar")
    sigma, omega, sw, sep = A.smearing.sigma, A.gap, A.switching, geo.L
    lam2 = A.lam ** 2

    def envelope(k):
        return k * np.exp(-(k * sigma) ** 2)

    def L_integrand(k):
        k = np.asarray(k, dtype=float)
        return lam2 / (4.0 * PI ** 2) * envelope(k) * chi_tilde_sq(k + omega, sw)

    def M_integrand(k):
        k = np.asarray(k, dtype=float)
        return (-lam2 / (2.0 * PI ** 2) * envelope(k) * q_factor(k, omega, sw)
                * spherical_bessel_j(0, k * sep))

    def LAB_integrand(k):
        return L_integrand(k) * spherical_bessel_j(0, np.asarray(k, dtype=float) * sep)

    return SpectralKernelSet(
        L_integrand=L_integrand,
        M_integrand=M_integrand,
        scenario_tag="scalar",
        prefactor_units="lambda^2 T^2 / (4 pi^2); M with Q(k, Omega)",
        damping_scale=sigma,
        oscillation_scale=sep,
        envelope_power=1.0,
        LAB_integrand=LAB_integrand,
    )


def _qscalar_isotropic(A: DetectorConfig, geo: PairGeometry) -> SpectralKernelSet:
    sigma, omega, sw, sep = A.smearing.sigma, A.gap, A.switching, geo.L
    lam2 = A.lam ** 2

    def envelope(k):
        return k ** 5 * np.exp(-(k * sigma) ** 2) * ((k * sigma) ** 2 - 3.0) ** 2

    def L_integrand(k):
        k = np.asarray(k, dtype=float)
        return lam2 * sigma ** 4 / (16.0 * PI ** 2) * envelope(k) * chi_tilde_sq(k + omega, sw)

    def M_integrand(k):
        k = np.asarray(k, dtype=float)
        return (-lam2 * sigma ** 4 / (8.0 * PI ** 2) * envelope(k) * q_factor(k, omega, sw)
                * spherical_bessel_j(0, k * sep))

    def LAB_integrand(k):
        return L_integrand(k) * spherical_bessel_j(0, np.asarray(k, dtype=float) * sep)

    return SpectralKernelSet(
        L_integrand=L_integrand,
        M_integrand=M_integrand,
        scenario_tag="qscalar",
        prefactor_units="lambda^2 T^2 sigma^4 / (16 pi^2); M with Q(k, Omega)",
        damping_scale=sigma,
        oscillation_scale=sep,
        envelope_power=9.0,
        LAB_integrand=LAB_integrand,
    )


def _qscalar_l2(A: DetectorConfig, geo: PairGeometry) -> SpectralKernelSet:
    sigma, omega, sw, sep = A.smearing.sigma, A.gap, A.switching, geo.L
    lam2 = A.lam ** 2
    orientation = angle_factor(geo.vartheta)

    def envelope(k):
        return k ** 9 * np.exp(-(k * sigma) ** 2)

    def L_integrand(k):
        k = np.asarray(k, dtype=float)
        return lam2 * sigma ** 8 / (256.0 * PI ** 3) * envelope(k) * chi_tilde_sq(k + omega, sw)

    # printed with a positive sign, unlike the other non-local terms
    def M_integrand(k):
        k = np.asarray(k, dtype=float)
        x = k * sep
        geometry = 7.0 * spherical_bessel_j(0, x) - 10.0 * spherical_bessel_j(2, x)
        return (lam2 * sigma ** 8 / (3584.0 * PI ** 3) * orientation * envelope(k)
                * q_factor(k, omega, sw) * geometry)

    return SpectralKernelSet(
        L_integrand=L_integrand,
        M_integrand=M_integrand,
        scenario_tag="qscalar-l2",
        prefactor_units="lambda^2 T^2 sigma^8 / (256 pi^3); M with Q(k, Omega)",
        damping_scale=sigma,
        oscillation_scale=sep,
        envelope_power=9.0,
    )


def qscalar_kernels(A: DetectorConfig, B: DetectorConfig, geo: PairGeometry) -> SpectralKernelSet:
    """
    Second-derivative scalar coupling with |x|^2 weighted Gaussian smearings.

    Dispatches between the isotropic family and the l = 2, m = 0 harmonic
    family; the latter carries the orientation factor 1 + 3 cos(2 vartheta).

    Raises:
        UnsupportedScenarioError: For other harmonics or mismatched detectors
    """
    require_identical_pair(A, B)
    if isinstance(A.smearing, GaussianIsotropic):
        return _qscalar_isotropic(A, geo)
    if isinstance(A.smearing, GaussianHarmonic) and A.smearing.q == AngularQuantum(2, 0):
        return _qscalar_l2(A, geo)
    raise UnsupportedScenarioError(
        f"qscalar kernels need isotropic or (2, 0) Gaussian smearing, got {A.smearing!r}")
