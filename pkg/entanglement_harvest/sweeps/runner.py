"""
Row evaluation and parallel sweeps.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Dict, Iterator, List, Optional

from ..core.state import negativity_from_magnitudes
from ..errors import HarvestError
from ..kernels.base import integrate_kernels
from ..kernels.registry import build_kernels
from ..oracle.momentum import MomentumOracle
from ..utils.config import thread_count
from .scenarios import build_pair, get_scenario, resolve_parameters
from .spec import SweepSpec

logger = logging.getLogger(__name__)

RESULT_COLUMNS = ("L_AA", "L_BB", "abs_M", "negativity", "L_error", "M_error", "flagged", "message")
AUDIT_COLUMNS = ("oracle_L", "oracle_abs_M", "audit_L_ratio", "audit_M_ratio")
NAN = float("nan")


@dataclass(frozen=True)
class SweepRow:
    """
    One evaluated parameter point, all values per lambda^2 = 1 unless lam is set.

    Attributes:
        params (Dict[str, float]): Parameter values of the point
        L_AA (float): Excitation probability of A
        L_BB (float): Excitation probability of B
        abs_M (float): Magnitude of the non-local term
        negativity (float): Negativity from L_AA, L_BB and abs_M
        L_error (float): Error estimate of L
        M_error (float): Error estimate of M
        flagged (bool): The point failed; values are NaN
        message (str): Failure description, empty otherwise
        audit (Dict[str, float]): Oracle columns when the sweep audits
    """
    params: Dict[str, float]
    L_AA: float
    L_BB: float
    abs_M: float
    negativity: float
    L_error: float
    M_error: float
    flagged: bool = False
    message: str = ""
    audit: Dict[str, float] = field(default_factory=dict)

    def record(self, parameter_names: List[str], audit: bool) -> Dict[str, object]:
        """Flat mapping in column order."""
        out: Dict[str, object] = {name: self.params.get(name, NAN) for name in parameter_names}
        for column in RESULT_COLUMNS:
            out[column] = getattr(self, column)
        if audit:
            for column in AUDIT_COLUMNS:
                out[column] = self.audit.get(column, NAN)
        return out

    def scaled(self, factor: float) -> "SweepRow":
        """Row with L_AA, L_BB, abs_M and errors multiplied by factor and negativity recomputed."""
        L_AA, L_BB, abs_M = self.L_AA * factor, self.L_BB * factor, self.abs_M * factor
        audit = dict(self.audit)
        for key in ("oracle_L", "oracle_abs_M"):
            if key in audit:
                audit[key] = audit[key] * factor
        return replace(self, L_AA=L_AA, L_BB=L_BB, abs_M=abs_M,
                       negativity=_negativity(L_AA, L_BB, abs_M),
                       L_error=self.L_error * factor, M_error=self.M_error * factor, audit=audit)


@dataclass
class SweepTable:
    """
    Rows of a sweep in deterministic order together with their spec.

    Attributes:
        spec (SweepSpec): The sweep that produced the rows
        rows (List[SweepRow]): Overlay-major, axis-minor order
    """
    spec: SweepSpec
    rows: List[SweepRow]

    def __iter__(self) -> Iterator[SweepRow]:
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def columns(self) -> List[str]:
        names = self.spec.parameter_names() + list(RESULT_COLUMNS)
        return names + (list(AUDIT_COLUMNS) if self.spec.audit else [])

    @property
    def flagged_count(self) -> int:
        return sum(1 for row in self.rows if row.flagged)


def _negativity(L_AA: float, L_BB: float, abs_M: float) -> float:
    if any(math.isnan(v) for v in (L_AA, L_BB, abs_M)):
        return NAN
    return negativity_from_magnitudes(L_AA, L_BB, abs_M)


def _ratio(a: float, b: float) -> float:
    return a / b if b != 0 else NAN


def _audit(scenario: str, params: Dict[str, float], L: float, abs_M: float,
           rel_tol: float) -> Dict[str, float]:
    A, B, geo = build_pair(scenario, params)
    oracle = MomentumOracle(get_scenario(scenario).model, A, B, geo)
    audit = {"oracle_L": float(oracle.l_value("AA", rel_tol).real)}
    audit["audit_L_ratio"] = _ratio(L, audit["oracle_L"])
    try:
        audit["oracle_abs_M"] = abs(oracle.m_value(rel_tol))
        audit["audit_M_ratio"] = _ratio(abs_M, audit["oracle_abs_M"])
    except HarvestError as exc:
        logger.info("M oracle skipped for %s: %s", scenario, exc)
    return audit


def compute_row(spec: SweepSpec, params: Dict[str, float]) -> SweepRow:
    """
    Evaluate one parameter point.

    Errors derived from HarvestError are caught and turned into a flagged
    row with NaN values; everything else propagates.
    """
    try:
        A, B, geo = build_pair(spec.scenario, params)
        sigma_scale = resolve_parameters(params)["sigma_scale"]
        kset = build_kernels(spec.scenario, A, B, geo, sigma_scale=sigma_scale)
        integrals = integrate_kernels(kset, spec.rel_tol)
        L, abs_M = integrals.L, abs(integrals.M)
        audit = _audit(spec.scenario, params, L, abs_M, spec.rel_tol) if spec.audit else {}
    except HarvestError as exc:
        logger.warning("row %s flagged: %s", params, exc)
        return SweepRow(params, NAN, NAN, NAN, NAN, NAN, NAN, True, f"{type(exc).__name__}: {exc}")
    return SweepRow(params, L, L, abs_M, _negativity(L, L, abs_M),
                    integrals.L_error, integrals.M_error, audit=audit)


def run_sweep(spec: SweepSpec, threads: Optional[int] = None) -> SweepTable:
    """
    Evaluate every point of a sweep.

    Rows are computed in parallel and returned overlay-major, axis-minor.

    Args:
        spec: Validated sweep
        threads: Worker count, from HARVEST_THREADS when omitted

    Returns:
        SweepTable: The rows with their spec

    Raises:
        ConfigurationError: For an invalid spec or thread setting
    """
    spec.validate()
    get_scenario(spec.scenario)
    resolve_parameters(dict.fromkeys(spec.parameter_names(), 0.0))
    workers = threads if threads is not None else thread_count()
    points = list(spec.points())
    logger.info("sweep %s: %d points on %d threads", spec.scenario, len(points), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(lambda p: compute_row(spec, p), points))
    table = SweepTable(spec, rows)
    if table.flagged_count:
        logger.warning("sweep %s: %d of %d rows flagged", spec.scenario, table.flagged_count, len(rows))
    else:
        logger.info("sweep %s finished", spec.scenario)
    return table
