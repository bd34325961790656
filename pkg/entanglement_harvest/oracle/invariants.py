"""
Quick invariant checks behind `harvest selftest`.

Each check returns a CheckResult instead of raising, so the command can
report every failure in one run. Checks marked slow evaluate the
momentum-space oracle and run only in audit mode.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Callable, List

import numpy as np

from ..core.model import CouplingModel, SwitchingProfile, q_factor
from ..core.state import TwoDetectorState, negativity, negativity_oracle
from ..kernels.base import integrate_kernels
from ..kernels.registry import build_kernels
from ..kernels.radial import general_radial_kernels
from ..special.wigner import wigner_3j, wigner_D_matrix
from ..sweeps.scenarios import build_pair
from .momentum import l_momentum_oracle, m_momentum_oracle
from .polarization import polarization_basis, tt_projector
from .racah import racah_3j_exact
from .time_domain import q_time_oracle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    """
    Attributes:
        name (str): Check identifier
        passed (bool): Outcome
        detail (str): Worst deviation or failure text
    """
    name: str
    passed: bool
    detail: str


def check_q_factor() -> CheckResult:
    sw = SwitchingProfile(1.0)
    worst = 0.0
    for k, omega in itertools.product((0.0, 0.5, 1.0, 2.0, 3.5, 5.0), (0.0, 0.5, 1.0, 2.5, 4.7)):
        deviation = abs(complex(q_factor(k, omega, sw)) - q_time_oracle(k, omega, sw))
        if not math.isfinite(deviation):
            worst = deviation
            break
        worst = max(worst, deviation)
    return CheckResult("q_factor", worst <= 1e-8, f"max abs deviation {worst:.2e}")


def check_projector() -> CheckResult:
    rng = np.random.default_rng(7)
    worst = 0.0
    for alpha, beta in zip(rng.uniform(0, np.pi, 20), rng.uniform(0, 2 * np.pi, 20)):
        basis = polarization_basis(alpha, beta)
        P = tt_projector(basis.khat)
        completeness = (np.einsum("ij,kl->ijkl", basis.E1, basis.E1)
                        + np.einsum("ij,kl->ijkl", basis.E2, basis.E2))
        worst = max(worst, float(np.max(np.abs(completeness - P))),
                    float(np.max(np.abs(np.einsum("ijkl,klmn->ijmn", P, P) - P))),
                    float(np.max(np.abs(np.einsum("ijkk->ij", P)))),
                    float(np.max(np.abs(np.einsum("ijkl,l->ijk", P, basis.khat)))))
    return CheckResult("projector", worst <= 1e-13, f"max deviation {worst:.2e}")


def check_wigner() -> CheckResult:
    worst = 0.0
    for l1, l2, l3 in itertools.product(range(3), repeat=3):
        for m1, m2 in itertools.product(range(-l1, l1 + 1), range(-l2, l2 + 1)):
            m3 = -m1 - m2
            if abs(m3) <= l3:
                worst = max(worst, abs(wigner_3j(l1, l2, l3, m1, m2, m3)
                                       - racah_3j_exact(l1, l2, l3, m1, m2, m3)))
    D = wigner_D_matrix(2, 0.3, 1.1, -0.7)
    worst = max(worst, float(np.max(np.abs(D @ D.conj().T - np.eye(5)))))
    return CheckResult("wigner", worst <= 1e-12, f"max deviation {worst:.2e}")


def check_negativity() -> CheckResult:
    state = TwoDetectorState(L_AA=2e-3, L_BB=2e-3, M=1.5e-3 - 2e-3j)
    gap = abs(negativity(state) - negativity_oracle(state))
    return CheckResult("negativity", gap <= 1e-12, f"closed form vs eigenvalues {gap:.2e}")


def check_general_radial() -> CheckResult:
    params = {"sigma": 0.2, "omega": 6.0, "L": 4.0, "theta": 0.4}
    A, B, geo = build_pair("gravity-l2", params)
    printed = build_kernels("gravity-l2", A, B, geo)
    general = general_radial_kernels(A.smearing.radial_profile, A.smearing.q, A, B, geo)
    k = np.linspace(0.05, 20.0, 200)
    worst = 0.0
    for a, b in ((printed.L_integrand, general.L_integrand), (printed.M_integrand, general.M_integrand)):
        va, vb = a(k), b(k)
        worst = max(worst, float(np.max(np.abs(va - vb) / np.max(np.abs(va)))))
    return CheckResult("general_radial", worst <= 1e-10, f"max relative deviation {worst:.2e}")


def check_scalar_oracle() -> CheckResult:
    A, B, geo = build_pair("scalar", {"sigma": 0.5, "omega": 2.0, "L": 6.0})
    integrals = integrate_kernels(build_kernels("scalar", A, B, geo), 1e-9)
    oracle_L = l_momentum_oracle(CouplingModel.SCALAR_LINEAR, A, B, geo, "AA", 1e-9).real
    oracle_M = m_momentum_oracle(CouplingModel.SCALAR_LINEAR, A, B, geo, 1e-9)
    worst = max(abs(oracle_L - integrals.L) / integrals.L,
                abs(oracle_M - integrals.M) / abs(integrals.M))
    return CheckResult("scalar_oracle", worst <= 1e-6, f"max relative deviation {worst:.2e}")


FAST_CHECKS: List[Callable[[], CheckResult]] = [
    check_q_factor, check_projector, check_wigner, check_negativity, check_general_radial,
]
SLOW_CHECKS: List[Callable[[], CheckResult]] = [check_scalar_oracle]


def run_checks(audit: bool = False) -> List[CheckResult]:
    """Run the fast checks, plus the oracle checks when audit is set."""
    results = []
    for check in FAST_CHECKS + (SLOW_CHECKS if audit else []):
        try:
            result = check()
        except Exception as exc:  # a crashing check is a failed check
            result = CheckResult(check.__name__.replace("check_", ""), False, repr(exc))
        log = logger.info if result.passed else logger.error
        log("selftest %-16s %s  %s", result.name, "ok" if result.passed else "FAIL", result.detail)
        results.append(result)
    return results
