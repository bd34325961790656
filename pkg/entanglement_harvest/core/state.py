"""
Two-detector density matrix and its negativity.
"""
import logging
import math
import warnings
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from ..errors import NumericError, PerturbativityWarning

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwoDetectorState:
    """
    Second-order matrix elements of the joint detector state.

    Attributes:
        L_AA (float): Excitation probability of A
        L_BB (float): Excitation probability of B
        M (complex): Non-local term
        L_AB (complex): Cross correlation
        L_BA (complex): Cross correlation, conj(L_AB) when left unset
    """
    L_AA: float
    L_BB: float
    M: complex = 0j
    L_AB: complex = 0j
    L_BA: Optional[complex] = None

    def __post_init__(self):
        if self.L_BA is None:
            object.__setattr__(self, "L_BA", complex(np.conj(self.L_AB)))

    @property
    def abs_M(self) -> float:
        return abs(self.M)

    def swapped(self) -> "TwoDetectorState":
        """State with the roles of A and B exchanged."""
        return replace(self, L_AA=self.L_BB, L_BB=self.L_AA, L_AB=self.L_BA, L_BA=self.L_AB)

    def scaled(self, factor: float) -> "TwoDetectorState":
        """Every element multiplied by factor (lambda -> sqrt(factor) lambda)."""
        return TwoDetectorState(self.L_AA * factor, self.L_BB * factor, self.M * factor,
                                self.L_AB * factor, self.L_BA * factor)


def assemble_density_matrix(s: TwoDetectorState) -> np.ndarray:
    """
    Build the 4x4 density matrix in the basis {gg, ge, eg, ee}.

    A PerturbativityWarning is issued when L_AA + L_BB > 1; the matrix is
    still returned.

    Args:
        s: Matrix elements

    Returns:
        np.ndarray: Complex 4x4 matrix with unit trace
    """
    total = s.L_AA + s.L_BB
    if total > 1.0:
        logger.warning("L_AA + L_BB = %.3g exceeds 1; second-order state is unreliable", total)
        warnings.warn(f"L_AA + L_BB = {total:.3g} exceeds 1", PerturbativityWarning)
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = 1.0 - total
    rho[0, 3] = np.conj(s.M)
    rho[1, 1] = s.L_BB
    rho[1, 2] = s.L_BA
    rho[2, 1] = s.L_AB
    rho[2, 2] = s.L_AA
    rho[3, 0] = s.M
    return rho


def negativity_from_magnitudes(L_AA: float, L_BB: float, abs_M: float) -> float:
    """
    Closed-form negativity max(0, sqrt(|M|^2 - (L_AA - L_BB)^2/4) - (L_AA + L_BB)/2).

    A negative square-root argument yields zero.
    """
    arg = abs_M * abs_M - 0.25 * (L_AA - L_BB) ** 2
    if arg <= 0.0:
        return 0.0
    return max(0.0, math.sqrt(arg) - 0.5 * (L_AA + L_BB))


def negativity(s: TwoDetectorState) -> float:
    """Closed-form negativity of a two-detector state."""
    return negativity_from_magnitudes(s.L_AA, s.L_BB, s.abs_M)


def partial_transpose(rho: np.ndarray) -> np.ndarray:
    """Partial transpose of a two-qubit matrix on the second subsystem."""
    return rho.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)


def negativity_oracle(s: TwoDetectorState) -> float:
    """
    Negativity as minus the sum of negative eigenvalues of the partial transpose.

    Raises:
        NumericError: If the eigen-solver fails
    """
    rho_tb = partial_transpose(assemble_density_matrix(s))
    try:
        eigenvalues = np.linalg.eigvalsh(rho_tb)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"eigen-solver failed on the partial transpose: {exc}") from exc
    return float(-np.sum(eigenvalues[eigenvalues < 0]))


def negativity_leading_order(L_AA: float, L_BB: float, abs_M: float) -> float:
    """
    Leading-order eigenvalue negativity max(0, sqrt(|M|^2 + (L_AA - L_BB)^2/4) - (L_AA + L_BB)/2).

    This is the exact negative eigenvalue of the partial transpose's
    (ge, eg) block. It equals negativity_from_magnitudes when L_AA = L_BB.
    """
    return max(0.0, math.sqrt(abs_M * abs_M + 0.25 * (L_AA - L_BB) ** 2) - 0.5 * (L_AA + L_BB))
