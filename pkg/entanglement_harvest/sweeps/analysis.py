"""
Shape summaries of negativity curves.
"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np


@dataclass(frozen=True)
class CurveSummary:
    """
    Attributes:
        harvests (bool): Some point has positive negativity
        threshold (Optional[float]): First x with positive negativity
        zero_below_threshold (bool): Every point before the threshold is exactly zero
        peak_x (Optional[float]): Location of the maximum
        peak_y (float): Maximum negativity
        unique_peak (bool): Exactly one strict local maximum among positive points
    """
    harvests: bool
    threshold: Optional[float]
    zero_below_threshold: bool
    peak_x: Optional[float]
    peak_y: float
    unique_peak: bool


def summarize_curve(x: Sequence[float], y: Sequence[float]) -> CurveSummary:
    """
    Summarize one curve; NaN points (flagged rows) are dropped.

    Args:
        x: Abscissae in increasing order
        y: Negativities

    Returns:
        CurveSummary: Threshold, peak and unimodality
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    keep = ~np.isnan(y)
    x, y = x[keep], y[keep]
    positive = np.flatnonzero(y > 0)
    if positive.size == 0:
        return CurveSummary(False, None, True, None, 0.0, False)
    first = int(positive[0])
    peak = int(np.argmax(y))
    segment = y[first:]
    inner = segment[1:-1]
    local = np.sum((inner > segment[:-2]) & (inner >= segment[2:]))
    local += int(segment.size == 1 or segment[0] > segment[1])
    local += int(segment.size > 1 and segment[-1] > segment[-2])
    return CurveSummary(
        harvests=True,
        threshold=float(x[first]),
        zero_below_threshold=bool(np.all(y[:first] == 0.0)),
        peak_x=float(x[peak]),
        peak_y=float(y[peak]),
        unique_peak=bool(local == 1),
    )


def summarize_table(table) -> List[Tuple[Dict[str, float], CurveSummary]]:
    """
    One summary per overlay curve of a swept table.

    Args:
        table: SweepTable whose spec has an axis

    Returns:
        List[Tuple[Dict[str, float], CurveSummary]]: Overlay values and the curve summary,
        in table order
    """
    spec = table.spec
    if spec.axis is None:
        return []
    curves: Dict[Tuple[float, ...], Tuple[List[float], List[float]]] = {}
    for row in table:
        key = tuple(row.params[o.name] for o in spec.overlays)
        xs, ys = curves.setdefault(key, ([], []))
        xs.append(row.params[spec.axis.name])
        ys.append(row.negativity)
    names = [o.name for o in spec.overlays]
    return [(dict(zip(names, key)), summarize_curve(xs, ys)) for key, (xs, ys) in curves.items()]
