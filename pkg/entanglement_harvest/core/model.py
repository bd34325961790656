"""
Detector, geometry and coupling data model plus the closed-form switching
and smearing building blocks.

All quantities are dimensionless in units of the switching width T unless a
SwitchingProfile with another T is supplied.
"""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Tuple, Union

import numpy as np

from ..errors import DomainError
from ..special.erfi import one_minus_erf_i_damped
from ..special.harmonics import AngularQuantum
from ..special.hydrogen import hydrogen_radial

FINE_STRUCTURE = 1.0 / 137.035999
ELECTRON_MASS_PLANCK = 4.2e-23
HYDROGEN_MASS_PLANCK = 7.68e-20


class CouplingModel(Enum):
    """Field the detectors couple to."""
    SCALAR_LINEAR = "scalar-linear"
    SCALAR_QUADRUPOLE = "scalar-quadrupole"
    GRAVITY_QUADRUPOLE = "gravity-quadrupole"


@dataclass(frozen=True)
class SwitchingProfile:
    """
    Gaussian switching chi(t) = e^{-t^2 / 2T^2} / sqrt(2 pi).

    Attributes:
        T (float): Switching width, positive
    """
    T: float = 1.0

    def __post_init__(self):
        if not self.T > 0:
            raise DomainError(f"switching width must be positive, got {self.T}")

    def chi(self, t) -> np.ndarray:
        """Evaluate the switching function at times t."""
        t = np.asarray(t, dtype=float)
        return np.exp(-t * t / (2.0 * self.T ** 2)) / math.sqrt(2.0 * math.pi)


def _gaussian_density(r, sigma: float) -> np.ndarray:
    r = np.asarray(r, dtype=float)
    return np.exp(-r * r / (2.0 * sigma ** 2)) / (2.0 * math.pi * sigma ** 2) ** 1.5


@dataclass(frozen=True)
class GaussianIsotropic:
    """
    Normalized spherical Gaussian smearing.

    Attributes:
        sigma (float): Width, positive
    """
    sigma: float

    def __post_init__(self):
        if not self.sigma > 0:
            raise DomainError(f"smearing width must be positive, got {self.sigma}")

    @property
    def angular(self) -> AngularQuantum:
        return AngularQuantum(0, 0)

    def radial_profile(self, r) -> np.ndarray:
        """Radial factor rho(r) with f(x) = rho(|x|) Y_00."""
        return math.sqrt(4.0 * math.pi) * _gaussian_density(r, self.sigma)

    def radial_extent(self) -> float:
        return 14.0 * self.sigma


@dataclass(frozen=True)
class GaussianHarmonic:
    """
    Gaussian radial profile times one spherical harmonic, f = G(r) Y_lm.

    The harmonic describes the excited-state angular content; the ground
    state is l = m = 0.

    Attributes:
        sigma (float): Width, positive
        q (AngularQuantum): Excited-state angular quantum numbers
    """
    sigma: float
    q: AngularQuantum = field(default_factory=lambda: AngularQuantum(2, 0))

    def __post_init__(self):
        if not self.sigma > 0:
            raise DomainError(f"smearing width must be positive, got {self.sigma}")

    @property
    def angular(self) -> AngularQuantum:
        return self.q

    def radial_profile(self, r) -> np.ndarray:
        return _gaussian_density(r, self.sigma)

    def radial_extent(self) -> float:
        return 14.0 * self.sigma


@dataclass(frozen=True)
class HydrogenTransition:
    """
    Transition smearing psi_excited psi_ground^* of a hydrogen-like atom.

    Attributes:
        ground (Tuple[int, int, int]): (n, l, m) of the ground state
        excited (Tuple[int, int, int]): (n, l, m) of the excited state
        a0 (float): Bohr radius, positive
        printed_radial (bool): Use the alternative radial functions
    """
    ground: Tuple[int, int, int]
    excited: Tuple[int, int, int]
    a0: float
    printed_radial: bool = False

    def __post_init__(self):
        if not self.a0 > 0:
            raise DomainError(f"Bohr radius must be positive, got {self.a0}")
        for n, l, m in (self.ground, self.excited):
            if n < 1 or not 0 <= l < n:
                raise DomainError(f"invalid hydrogen state ({n}, {l}, {m})")
            AngularQuantum(l, m)

    @property
    def angular(self) -> AngularQuantum:
        if self.ground[1] != 0:
            raise DomainError("only l = 0 ground states are supported")
        return AngularQuantum(self.excited[1], self.excited[2])

    def radial_product(self, r) -> np.ndarray:
        """R_excited(r) R_ground(r)."""
        ne, le, _ = self.excited
        ng, lg, _ = self.ground
        return (hydrogen_radial(ne, le, r, self.a0, self.printed_radial)
                * hydrogen_radial(ng, lg, r, self.a0, self.printed_radial))

    def radial_profile(self, r) -> np.ndarray:
        # Y_00^* of the ground state is the constant 1/sqrt(4 pi)
        return self.radial_product(r) / math.sqrt(4.0 * math.pi)

    def radial_extent(self) -> float:
        return 40.0 * self.excited[0] * self.a0


SmearingSpec = Union[GaussianIsotropic, GaussianHarmonic, HydrogenTransition]


@dataclass(frozen=True)
class DetectorConfig:
    """
    One detector.

    Attributes:
        lam (float): Dimensionless coupling, non-negative
        gap (float): Energy gap Omega, non-negative
        smearing (SmearingSpec): Spatial profile
        switching (SwitchingProfile): Time profile
    """
    lam: float
    gap: float
    smearing: SmearingSpec
    switching: SwitchingProfile = field(default_factory=SwitchingProfile)

    def __post_init__(self):
        if self.lam < 0:
            raise DomainError(f"coupling must be non-negative, got {self.lam}")
        if self.gap < 0:
            raise DomainError(f"negative energy gaps are not supported, got {self.gap}")


@dataclass(frozen=True)
class PairGeometry:
    """
    Relative placement of detector B with respect to A.

    Attributes:
        L (float): Separation along A's z axis, non-negative
        psi (float): First Euler angle of B's frame
        vartheta (float): Second Euler angle
        varphi (float): Third Euler angle
    """
    L: float
    psi: float = 0.0
    vartheta: float = 0.0
    varphi: float = 0.0

    def __post_init__(self):
        if self.L < 0:
            raise DomainError(f"separation must be non-negative, got {self.L}")
        if not all(math.isfinite(a) for a in (self.L, self.psi, self.vartheta, self.varphi)):
            raise DomainError("geometry entries must be finite")

    @property
    def euler(self) -> Tuple[float, float, float]:
        return self.psi, self.vartheta, self.varphi


def chi_tilde_sq(omega, sw: SwitchingProfile) -> np.ndarray:
    """
    Squared switching transform |chi~(omega)|^2 = T^2 e^{-T^2 omega^2}.

    Args:
        omega: Frequency
        sw: Switching profile

    Returns:
        np.ndarray: Strictly positive, even in omega
    """
    omega = np.asarray(omega, dtype=float)
    return sw.T ** 2 * np.exp(-(sw.T * omega) ** 2)


def q_factor(k, omega: float, sw: SwitchingProfile) -> np.ndarray:
    """
    Time-ordered switching factor Q(k, Omega) = (T^2/2) e^{-T^2(k^2+Omega^2)} (1 - erf(ikT)).

    Args:
        k: Momentum magnitude, non-negative
        omega: Energy gap
        sw: Switching profile

    Returns:
        np.ndarray: Complex Q with positive real part
    """
    k = np.asarray(k, dtype=float)
    if np.any(k < 0):
        raise DomainError("q_factor requires k >= 0")
    T = sw.T
    return 0.5 * T ** 2 * one_minus_erf_i_damped(k * T, T ** 2 * (k * k + omega * omega))


def gaussian_ft(sigma: float, k) -> np.ndarray:
    """Fourier transform e^{-k^2 sigma^2 / 2} of the unit Gaussian smearing."""
    k = np.asarray(k, dtype=float)
    return np.exp(-0.5 * (k * sigma) ** 2)


def quadrupole_ft_tensor(sigma: float, kvec) -> np.ndarray:
    """
    Fourier transform of x^i x^j times the unit Gaussian.

    Args:
        sigma: Gaussian width
        kvec: Momenta of shape (..., 3)

    Returns:
        np.ndarray: (sigma^2 delta_ij - sigma^4 k_i k_j) e^{-k^2 sigma^2/2}, shape (..., 3, 3)
    """
    kvec = np.asarray(kvec, dtype=float)
    k2 = np.sum(kvec * kvec, axis=-1)
    outer = kvec[..., :, None] * kvec[..., None, :]
    tensor = sigma ** 2 * np.eye(3) - sigma ** 4 * outer
    return tensor * np.exp(-0.5 * k2 * sigma ** 2)[..., None, None]


def coupling_from_mass(mass_in_planck_units: float) -> float:
    """Coupling lambda = sqrt(pi/2) m / m_p for a detector of mass m."""
    if mass_in_planck_units < 0:
        raise DomainError("mass must be non-negative")
    return math.sqrt(math.pi / 2.0) * mass_in_planck_units


def bohr_radius_for_gap(gap: float, alpha: float = FINE_STRUCTURE) -> float:
    """Bohr radius tied to the gap as a0 = alpha / (2 Omega)."""
    if not gap > 0:
        raise DomainError(f"a gap-dependent Bohr radius needs a positive gap, got {gap}")
    return alpha / (2.0 * gap)
