"""
Fourier transforms of detector smearings for the momentum-space oracle.

Transforms are evaluated on a product of momentum magnitudes k (N,) and unit
directions (D, 3) and return arrays of shape (N, D) for scalar couplings or
(N, D, 3, 3) for the tensor coupling. Gaussian isotropic smearings use closed
forms; every other smearing goes through a multipole expansion of the plane
wave, with the radial integrals done on a composite Gauss-Legendre grid.
"""
import math
from typing import Dict, Tuple

import numpy as np

from ..core.model import CouplingModel, GaussianIsotropic, gaussian_ft
from ..errors import DomainError
from ..integration.sphere import rule_for_order
from ..special.bessel import spherical_bessel_j
from ..special.harmonics import harmonic_at_direction

ANGULAR_ORDER = 24


def radial_grid(extent: float, panels: int = 64, order: int = 16) -> Tuple[np.ndarray, np.ndarray]:
    """
    Composite Gauss-Legendre nodes and weights on [0, extent].

    Args:
        extent: Upper radius, positive
        panels: Number of equal panels
        order: Nodes per panel

    Returns:
        Tuple[np.ndarray, np.ndarray]: Nodes and weights
    """
    if not extent > 0:
        raise DomainError(f"radial extent must be positive, got {extent}")
    x, w = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(0.0, extent, panels + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    centre = 0.5 * (edges[1:] + edges[:-1])
    nodes = (centre[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def radial_moment(profile, k, nodes: np.ndarray, weights: np.ndarray, power: int, l: int) -> np.ndarray:
    """
    I(k) = integral of r^power profile(r) j_l(k r) dr on a fixed grid.

    Args:
        profile: Radial function values at the nodes
        k: Momenta of shape (N,)
        nodes: Radial nodes
        weights: Radial weights
        power: Power of r
        l: Bessel order

    Returns:
        np.ndarray: Shape (N,)
    """
    k = np.asarray(k, dtype=float)
    measure = weights * nodes ** power * profile
    return spherical_bessel_j(l, np.outer(k, nodes)) @ measure


def _is_tensor(model: CouplingModel) -> bool:
    return model is CouplingModel.GRAVITY_QUADRUPOLE


def _radial_power(model: CouplingModel) -> int:
    return 0 if model is CouplingModel.SCALAR_LINEAR else 2


class GaussianClosedForm:
    """Closed-form transforms of the isotropic Gaussian smearing."""

    def __init__(self, smearing: GaussianIsotropic, model: CouplingModel):
        self.sigma = smearing.sigma
        self.model = model
        self.tensor = _is_tensor(model)

    def __call__(self, k: np.ndarray, directions: np.ndarray) -> np.ndarray:
        k = np.asarray(k, dtype=float)
        s2 = self.sigma ** 2
        envelope = gaussian_ft(self.sigma, k)
        if self.model is CouplingModel.SCALAR_LINEAR:
            radial = envelope
        elif self.model is CouplingModel.SCALAR_QUADRUPOLE:
            radial = s2 * (3.0 - k * k * s2) * envelope
        else:
            outer = directions[:, :, None] * directions[:, None, :]
            iso = s2 * envelope[:, None, None, None] * np.eye(3)
            return (iso - (s2 * s2 * k * k * envelope)[:, None, None, None] * outer[None]
                    ).astype(complex)
        return np.broadcast_to(radial[:, None], (k.size, directions.shape[0])).astype(complex)


class MultipoleTransform:
    """
    Plane-wave multipole transform of f = rho(r) Y_lm.

    F(k) = sum_L 4 pi i^L I_L(|k|) G_L(khat) with
    G_L(khat) = sum_M Y*_LM(khat) A_LM, A_LM the angular overlap of the
    smearing's angular factor (times n_i n_j for the tensor coupling) with Y_LM.
    """

    def __init__(self, smearing, model: CouplingModel, panels: int = 64, order: int = 16):
        self.model = model
        self.tensor = _is_tensor(model)
        self.power = 2 + _radial_power(model)
        q = smearing.angular
        self.l = q.l
        self.nodes, self.weights = radial_grid(smearing.radial_extent(), panels, order)
        self.profile = np.asarray(smearing.radial_profile(self.nodes), dtype=float)
        self.overlaps = self._overlaps(q.l, q.m)

    def _overlaps(self, l: int, m: int) -> Dict[Tuple[int, int], np.ndarray]:
        rule = rule_for_order(ANGULAR_ORDER)
        dirs = rule.directions
        base = harmonic_at_direction(l, m, dirs) * rule.weights
        if self.tensor:
            base = base[..., None, None] * dirs[..., :, None] * dirs[..., None, :]
        top = l + 2 if self.tensor else l
        overlaps = {}
        for L in range(top + 1):
            for M in range(-L, L + 1):
                y = harmonic_at_direction(L, M, dirs)
                if self.tensor:
                    value = np.einsum("ab,abij->ij", y, base)
                else:
                    value = np.sum(y * base)
                overlaps[(L, M)] = np.asarray(value)
        scale = max(float(np.max(np.abs(v))) for v in overlaps.values())
        return {key: v for key, v in overlaps.items() if np.max(np.abs(v)) > 1e-13 * scale}

    def orders(self):
        """Degrees L that contribute."""
        return sorted({L for L, _ in self.overlaps})

    def angular_part(self, L: int, directions: np.ndarray) -> np.ndarray:
        """G_L at the given directions, shape (D,) or (D, 3, 3)."""
        shape = (directions.shape[0], 3, 3) if self.tensor else (directions.shape[0],)
        total = np.zeros(shape, dtype=complex)
        for (deg, M), overlap in self.overlaps.items():
            if deg != L:
                continue
            y = np.conj(harmonic_at_direction(L, M, directions))
            total += y[:, None, None] * overlap if self.tensor else y * overlap
        return total

    def __call__(self, k: np.ndarray, directions: np.ndarray) -> np.ndarray:
        k = np.asarray(k, dtype=float)
        shape = (k.size, directions.shape[0]) + ((3, 3) if self.tensor else ())
        total = np.zeros(shape, dtype=complex)
        for L in self.orders():
            radial = 4.0 * math.pi * (1j ** L) * radial_moment(
                self.profile, k, self.nodes, self.weights, self.power, L)
            angular = self.angular_part(L, directions)
            total += np.einsum("n,d...->nd...", radial, angular)
        return total


def smearing_transform(smearing, model: CouplingModel):
    """Pick the closed-form or multipole transform for a smearing."""
    if isinstance(smearing, GaussianIsotropic):
        return GaussianClosedForm(smearing, model)
    return MultipoleTransform(smearing, model)


class PlacedTransform:
    """
    Transform of a smearing rotated by `rotation` and centred at separation * zhat.

    F_B(k) = e^{i k . L} R F_0(R^T k) R^T for tensors, without the R factors
    for scalars.
    """

    def __init__(self, base, rotation: np.ndarray, separation: float):
        self.base = base
        self.rotation = np.asarray(rotation, dtype=float)
        self.separation = separation
        self.tensor = base.tensor

    def __call__(self, k: np.ndarray, directions: np.ndarray) -> np.ndarray:
        k = np.asarray(k, dtype=float)
        local = directions @ self.rotation
        values = self.base(k, local)
        if self.tensor:
            values = np.einsum("ia,ndab,jb->ndij", self.rotation, values, self.rotation)
        if self.separation:
            phase = np.exp(1j * np.outer(k, directions[:, 2]) * self.separation)
            values = values * (phase[..., None, None] if self.tensor else phase)
        return values
