"""
Kernels for detectors coupled to the linearized curvature through a
quadrupole smearing x^i x^j f(x).
"""
import math

import numpy as np

from ..core.model import (
    DetectorConfig, GaussianHarmonic, GaussianIsotropic, PairGeometry, chi_tilde_sq, q_factor,
)
from ..errors import SingularGeometryError, UnsupportedScenarioError
from ..special.bessel import spherical_bessel_j
from ..special.harmonics import AngularQuantum
from .base import SpectralKernelSet, require_identical_pair, require_smearing
from .scalar import angle_factor

PI = math.pi


def gaussian_bracket(x) -> np.ndarray:
    """
    3x cos x + (x^2 - 3) sin x, evaluated as -x^3 j_2(x).

    Behaves as -x^5/15 near zero.
    """
    x = np.asarray(x, dtype=float)
    return -x ** 3 * spherical_bessel_j(2, x)


def gravity_gaussian_kernels(A: DetectorConfig, B: DetectorConfig,
                             geo: PairGeometry) -> SpectralKernelSet:
    """
    Gravitational coupling with isotropic Gaussian smearings.

    Args:
        A: First detector
        B: Second detector, identical to A up to placement
        geo: Pair geometry with L > 0

    Returns:
        SpectralKernelSet: L and M integrands

    Raises:
        SingularGeometryError: If L = 0, where the 1/L^5 prefactor diverges
        UnsupportedScenarioError: For mismatched detectors or other smearings
    """
    require_identical_pair(A, B)
    require_smearing(A, GaussianIsotropic, "gravity-gaussian")
    if geo.L == 0:
        raise SingularGeometryError("the isotropic gravitational kernel is singular at L = 0")
    sigma, omega, sw, sep = A.smearing.sigma, A.gap, A.switching, geo.L
    lam2 = A.lam ** 2

    def L_integrand(k):
        k = np.asarray(k, dtype=float)
        return (lam2 * sigma ** 8 / (30.0 * PI ** 2) * k ** 9 * np.exp(-(k * sigma) ** 2)
                * chi_tilde_sq(k + omega, sw))

    def M_integrand(k):
        k = np.asarray(k, dtype=float)
        return (-lam2 * sigma ** 8 / (sep ** 5 * PI ** 2) * k ** 4 * np.exp(-(k * sigma) ** 2)
                * q_factor(k, omega, sw) * gaussian_bracket(k * sep))

    return SpectralKernelSet(
        L_integrand=L_integrand,
        M_integrand=M_integrand,
        scenario_tag="gravity-gaussian",
        prefactor_units="lambda^2 T^2 sigma^8 / (30 pi^2); M with Q(k, Omega) / L^5",
        damping_scale=sigma,
        oscillation_scale=sep,
        envelope_power=9.0,
    )


def gravity_l2_kernels(A: DetectorConfig, B: DetectorConfig, geo: PairGeometry) -> SpectralKernelSet:
    """
    Gravitational coupling for the l = 0 -> l = 2, m = 0 Gaussian transition.

    Raises:
        UnsupportedScenarioError: For any other smearing; other harmonics go
            through general_radial_kernels
    """
    require_identical_pair(A, B)
    require_smearing(A, GaussianHarmonic, "gravity-l2")
    if A.smearing.q != AngularQuantum(2, 0):
        raise UnsupportedScenarioError(
            f"gravity-l2 kernels need the (2, 0) harmonic, got ({A.smearing.q.l}, {A.smearing.q.m})")
    sigma, omega, sw, sep = A.smearing.sigma, A.gap, A.switching, geo.L
    lam2 = A.lam ** 2
    orientation = angle_factor(geo.vartheta)

    def envelope(k):
        return k ** 5 * np.exp(-(k * sigma) ** 2) * (7.0 + (k * sigma) ** 2) ** 2

    def L_integrand(k):
        k = np.asarray(k, dtype=float)
        return 3.0 * lam2 * sigma ** 4 / (78400.0 * PI ** 4) * envelope(k) * chi_tilde_sq(k + omega, sw)

    def M_integrand(k):
        k = np.asarray(k, dtype=float)
        x = k * sep
        geometry = 7.0 * spherical_bessel_j(0, x) + 10.0 * spherical_bessel_j(2, x)
        return (-6.0 * lam2 * sigma ** 4 / (2195200.0 * PI ** 4) * orientation * envelope(k)
                * geometry * q_factor(k, omega, sw))

    return SpectralKernelSet(
        L_integrand=L_integrand,
        M_integrand=M_integrand,
        scenario_tag="gravity-l2",
        prefactor_units="3 lambda^2 T^2 sigma^4 / (78400 pi^4); M with Q(k, Omega)",
        damping_scale=sigma,
        oscillation_scale=sep,
        envelope_power=9.0,
    )
