"""
Graviton polarization tensors and the transverse-traceless projector.
"""
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError

_INV_SQRT2 = 1.0 / np.sqrt(2.0)


@dataclass(frozen=True)
class PolarizationBasis:
    """
    Transverse basis for the propagation direction (alpha, beta).

    Attributes:
        khat (np.ndarray): Propagation direction, shape (..., 3)
        e1 (np.ndarray): First transverse vector, shape (..., 3)
        e2 (np.ndarray): Second transverse vector, shape (..., 3)
        E1 (np.ndarray): Plus polarization tensor, shape (..., 3, 3)
        E2 (np.ndarray): Cross polarization tensor, shape (..., 3, 3)
    """
    khat: np.ndarray
    e1: np.ndarray
    e2: np.ndarray
    E1: np.ndarray
    E2: np.ndarray


def polarization_basis(alpha, beta) -> PolarizationBasis:
    """
    Polarization vectors and tensors for k = |k|(sin a cos b, sin a sin b, cos a).

    {khat, e1, e2} is right-handed; E1 = (e1 e1 - e2 e2)/sqrt(2) and
    E2 = (e1 e2 + e2 e1)/sqrt(2). Both arguments broadcast.
    """
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    alpha, beta = np.broadcast_arrays(alpha, beta)
    sa, ca = np.sin(alpha), np.cos(alpha)
    sb, cb = np.sin(beta), np.cos(beta)
    khat = np.stack([sa * cb, sa * sb, ca], axis=-1)
    e1 = np.stack([ca * cb, ca * sb, -sa], axis=-1)
    e2 = np.stack([-sb, cb, np.zeros_like(sb)], axis=-1)
    outer11 = e1[..., :, None] * e1[..., None, :]
    outer22 = e2[..., :, None] * e2[..., None, :]
    outer12 = e1[..., :, None] * e2[..., None, :]
    E1 = _INV_SQRT2 * (outer11 - outer22)
    E2 = _INV_SQRT2 * (outer12 + np.swapaxes(outer12, -1, -2))
    return PolarizationBasis(khat, e1, e2, E1, E2)


def tt_projector(khat) -> np.ndarray:
    """
    Transverse-traceless projector P_ijkl = (Pi_ik Pi_jl + Pi_il Pi_jk - Pi_ij Pi_kl)/2.

    Args:
        khat: Unit 3-vector

    Returns:
        np.ndarray: Rank-4 tensor of shape (3, 3, 3, 3)

    Raises:
        DomainError: If |khat| differs from one by more than 1e-12
    """
    khat = np.asarray(khat, dtype=float)
    if khat.shape != (3,) or abs(np.linalg.norm(khat) - 1.0) > 1e-12:
        raise DomainError("tt_projector needs a unit 3-vector")
    pi = np.eye(3) - np.outer(khat, khat)
    return 0.5 * (np.einsum("ik,jl->ijkl", pi, pi) + np.einsum("il,jk->ijkl", pi, pi)
                  - np.einsum("ij,kl->ijkl", pi, pi))


def helicity_two_components(tensor: np.ndarray, basis: PolarizationBasis) -> np.ndarray:
    """
    Contractions E_s : F for s = 1, 2.

    Args:
        tensor: Complex tensors of shape (..., 3, 3)
        basis: Polarization basis broadcastable against tensor

    Returns:
        np.ndarray: Shape (..., 2)
    """
    c1 = np.einsum("...ij,...ij->...", basis.E1, tensor)
    c2 = np.einsum("...ij,...ij->...", basis.E2, tensor)
    return np.stack([c1, c2], axis=-1)
