"""
Brute-force momentum-space evaluation of L_IJ and M.

The k-space integrals are done as a radial Gauss-Kronrod integral whose
integrand is itself a product-rule integral over directions. Gravitational
contractions go through explicit polarization tensors.
"""
import logging
import math
from typing import Callable, Dict

import numpy as np

from ..core.model import (
    CouplingModel, DetectorConfig, HydrogenTransition, PairGeometry, q_factor,
)
from ..errors import DomainError, UnsupportedScenarioError
from ..integration.gauss_kronrod import integrate_semi_infinite
from ..integration.sphere import SphereRule, sphere_rule
from ..special.wigner import rotation_matrix
from .polarization import PolarizationBasis, helicity_two_components, polarization_basis
from .transforms import ANGULAR_ORDER, PlacedTransform, smearing_transform

logger = logging.getLogger(__name__)

_CHUNK = 32
_PHASE_MARGIN = 48.0
_SCALE_TOL = 1e-3
_PAIRS = {"AA": ("A", "A"), "BB": ("B", "B"), "AB": ("A", "B"), "BA": ("B", "A")}


def _measure(model: CouplingModel, k: np.ndarray) -> np.ndarray:
    # k^2 dk times 1/(2k) for the field, or |k|^3/8 for the second-derivative couplings
    if model is CouplingModel.SCALAR_LINEAR:
        return 0.5 * k
    return k ** 5 / 8.0


def _chi_tilde(k: np.ndarray, det: DetectorConfig) -> np.ndarray:
    T = det.switching.T
    return T * np.exp(-0.5 * (T * (det.gap + k)) ** 2)


def _damping(det: DetectorConfig) -> float:
    sigma = getattr(det.smearing, "sigma", None)
    return sigma if sigma is not None else det.switching.T


class MomentumOracle:
    """
    Momentum-space integrals for one coupling model and detector pair.

    Args:
        model: Field coupling
        A: Detector at the origin
        B: Detector at L zhat, rotated by the pair's Euler angles
        geo: Pair geometry
        order: Harmonic degree integrated exactly on the sphere
    """

    def __init__(self, model: CouplingModel, A: DetectorConfig, B: DetectorConfig,
                 geo: PairGeometry, order: int = ANGULAR_ORDER):
        self.model = model
        self.detectors = {"A": A, "B": B}
        self.geo = geo
        self.order = order
        self.transforms = {
            "A": PlacedTransform(smearing_transform(A.smearing, model), np.eye(3), 0.0),
            "B": PlacedTransform(smearing_transform(B.smearing, model),
                                 rotation_matrix(*geo.euler), geo.L),
        }
        self._rules: Dict[int, tuple] = {}

    def _rule(self, k_max: float, phased: bool):
        n_theta = self.order // 2 + 1
        if phased and self.geo.L > 0:
            n_theta = max(n_theta, int(math.ceil((k_max * self.geo.L + _PHASE_MARGIN) / 2.0)))
        if n_theta not in self._rules:
            rule: SphereRule = sphere_rule(n_theta, self.order + 1)
            basis = polarization_basis(rule.theta.ravel(), rule.phi.ravel())
            self._rules[n_theta] = (rule.directions.reshape(-1, 3), rule.weights.ravel(), basis)
        return self._rules[n_theta]

    def _contract(self, X: np.ndarray, Y: np.ndarray, basis: PolarizationBasis) -> np.ndarray:
        if self.model is CouplingModel.GRAVITY_QUADRUPOLE:
            cx = helicity_two_components(X, basis)
            cy = helicity_two_components(Y, basis)
            return np.sum(cx * cy, axis=-1)
        return X * Y

    def _sphere(self, k, phased: bool, pointwise: Callable) -> np.ndarray:
        k = np.asarray(k, dtype=float)
        flat = k.ravel()
        out = np.zeros(flat.size, dtype=complex)
        order = np.argsort(flat, kind="stable")
        for start in range(0, flat.size, _CHUNK):
            idx = order[start:start + _CHUNK]
            kc = flat[idx]
            dirs, weights, basis = self._rule(float(kc.max()), phased)
            out[idx] = pointwise(kc, dirs, basis) @ weights
        return out.reshape(k.shape)

    def l_integrand(self, which: str = "AA", magnitude: bool = False) -> Callable:
        """
        Radial integrand of L_IJ, all prefactors included.

        Args:
            which: One of AA, BB, AB, BA
            magnitude: Replace the contraction by the product of tensor norms

        Returns:
            Callable: Vectorized k -> complex
        """
        if which not in _PAIRS:
            raise DomainError(f"which must be one of {sorted(_PAIRS)}, got {which!r}")
        first, second = _PAIRS[which]
        I, J = self.detectors[first], self.detectors[second]
        TI, TJ = self.transforms[first], self.transforms[second]
        phased = first != second
        prefactor = I.lam * J.lam / (8.0 * math.pi ** 3)

        def pointwise(kc, dirs, basis):
            X, Y = TI(kc, dirs), TJ(kc, dirs)
            if magnitude:
                return _norm(X) * _norm(Y)
            return self._contract(X, np.conj(Y), basis)

        def integrand(k):
            k = np.asarray(k, dtype=float)
            weight = prefactor * _measure(self.model, k) * _chi_tilde(k, I) * _chi_tilde(k, J)
            return weight * self._sphere(k, phased, pointwise)

        return integrand

    def m_integrand(self, magnitude: bool = False) -> Callable:
        """
        Radial integrand of M including both orderings of the detectors.

        Raises:
            UnsupportedScenarioError: If the gaps or switchings differ
        """
        A, B = self.detectors["A"], self.detectors["B"]
        if A.gap != B.gap or A.switching != B.switching:
            raise UnsupportedScenarioError("the M oracle needs identical gaps and switchings")
        TA, TB = self.transforms["A"], self.transforms["B"]
        prefactor = -A.lam * B.lam / (8.0 * math.pi ** 3)

        def pointwise(kc, dirs, basis):
            XA, XB = TA(kc, dirs), TB(kc, dirs)
            XA_neg, XB_neg = TA(kc, -dirs), TB(kc, -dirs)
            if magnitude:
                return _norm(XA) * _norm(XB_neg) + _norm(XB) * _norm(XA_neg)
            return self._contract(XA, XB_neg, basis) + self._contract(XB, XA_neg, basis)

        def integrand(k):
            k = np.asarray(k, dtype=float)
            weight = prefactor * _measure(self.model, k) * q_factor(k, A.gap, A.switching)
            return weight * self._sphere(k, True, pointwise)

        return integrand

    def _integrate(self, integrand, magnitude_integrand, damping: float, rel_tol: float) -> complex:
        # an absolute floor from the uncontracted magnitude lets selection-rule zeros converge
        power = 1.0 if self.model is CouplingModel.SCALAR_LINEAR else 9.0
        scale = integrate_semi_infinite(magnitude_integrand, damping, self.geo.L, _SCALE_TOL,
                                        envelope_power=power)
        abs_tol = max(rel_tol * abs(scale.value), 1e-300)
        result = integrate_semi_infinite(integrand, damping, self.geo.L, rel_tol, abs_tol, power)
        logger.debug("oracle integral %.6e%+.6ej with %d panels", result.value.real,
                     result.value.imag, result.panels_used)
        return complex(result.value)

    def l_value(self, which: str = "AA", rel_tol: float = 1e-8) -> complex:
        """Integrated L_IJ."""
        first, second = _PAIRS.get(which, ("A", "A"))
        damping = max(_damping(self.detectors[first]), _damping(self.detectors[second]))
        return self._integrate(self.l_integrand(which), self.l_integrand(which, magnitude=True),
                               damping, rel_tol)

    def m_value(self, rel_tol: float = 1e-8) -> complex:
        """Integrated M."""
        for det in self.detectors.values():
            if isinstance(det.smearing, HydrogenTransition):
                raise UnsupportedScenarioError(
                    "the M oracle needs a Gaussian smearing envelope; hydrogen transitions have none")
        damping = max(_damping(d) for d in self.detectors.values())
        return self._integrate(self.m_integrand(), self.m_integrand(magnitude=True),
                               damping, rel_tol)


def _norm(X: np.ndarray) -> np.ndarray:
    if X.ndim == 4:
        return np.sqrt(np.sum(np.abs(X) ** 2, axis=(-2, -1)))
    return np.abs(X)


def l_momentum_oracle(model: CouplingModel, A: DetectorConfig, B: DetectorConfig,
                      geo: PairGeometry, which: str = "AA", rel_tol: float = 1e-8) -> complex:
    """
    Full three-dimensional momentum integral of L_IJ.

    Args:
        model: Field coupling
        A: First detector
        B: Second detector
        geo: Pair geometry
        which: One of AA, BB, AB, BA
        rel_tol: Relative tolerance of the radial integral

    Returns:
        complex: L_IJ; real for AA and BB
    """
    return MomentumOracle(model, A, B, geo).l_value(which, rel_tol)


def m_momentum_oracle(model: CouplingModel, A: DetectorConfig, B: DetectorConfig,
                      geo: PairGeometry, rel_tol: float = 1e-8) -> complex:
    """
    Full three-dimensional momentum integral of M.

    Raises:
        UnsupportedScenarioError: For hydrogen smearings or mismatched gaps
    """
    return MomentumOracle(model, A, B, geo).m_value(rel_tol)


def helicity_fraction(smearing, k_values) -> float:
    """
    Largest helicity-two content of a smearing's quadrupole transform.

    Returns max over k and directions of sum_s |E_s : F|^2 divided by the
    largest |F|^2; zero up to round-off when the transverse-traceless
    projector annihilates the smearing.
    """
    transform = smearing_transform(smearing, CouplingModel.GRAVITY_QUADRUPOLE)
    rule = sphere_rule(ANGULAR_ORDER // 2 + 1, ANGULAR_ORDER + 1)
    dirs = rule.directions.reshape(-1, 3)
    basis = polarization_basis(rule.theta.ravel(), rule.phi.ravel())
    F = transform(np.asarray(k_values, dtype=float), dirs)
    helicity = np.sum(np.abs(helicity_two_components(F, basis)) ** 2, axis=-1)
    total = np.sum(np.abs(F) ** 2, axis=(-2, -1))
    peak = float(np.max(total))
    return float(np.max(helicity)) / peak if peak > 0 else 0.0
