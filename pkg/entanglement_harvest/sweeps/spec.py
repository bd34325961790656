"""
Sweep specifications and the parsers for their command-line forms.
"""
import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from ..errors import ConfigurationError


@dataclass(frozen=True)
class Axis:
    """
    Swept parameter.

    Attributes:
        name (str): Parameter name
        start (float): First value
        stop (float): Last value
        count (int): Number of values, at least 2
        log (bool): Geometric instead of linear spacing
    """
    name: str
    start: float
    stop: float
    count: int
    log: bool = False

    def values(self) -> np.ndarray:
        if self.log:
            return np.geomspace(self.start, self.stop, self.count)
        return np.linspace(self.start, self.stop, self.count)

    def to_text(self) -> str:
        parts = [self.name, repr(self.start), repr(self.stop), str(self.count)]
        if self.log:
            parts.append("log")
        return ":".join(parts)


@dataclass(frozen=True)
class Overlay:
    """
    Parameter held at each of several values, one curve per value.

    Attributes:
        name (str): Parameter name
        values (Tuple[float, ...]): Values in output order
    """
    name: str
    values: Tuple[float, ...]

    def to_text(self) -> str:
        return f"{self.name}=" + ",".join(repr(v) for v in self.values)


@dataclass
class SweepSpec:
    """
    A parameter sweep over one scenario.

    Attributes:
        scenario (str): Scenario identifier
        fixed (Dict[str, float]): Parameters held constant
        axis (Optional[Axis]): Inner swept parameter; None for a single point
        overlays (List[Overlay]): Outer parameter lists
        rel_tol (float): Relative tolerance of every integral
        audit (bool): Also evaluate the momentum-space oracle per row
    """
    scenario: str
    fixed: Dict[str, float] = field(default_factory=dict)
    axis: Optional[Axis] = None
    overlays: List[Overlay] = field(default_factory=list)
    rel_tol: float = 1e-8
    audit: bool = False

    def validate(self) -> None:
        """
        Raises:
            ConfigurationError: If the spec is malformed
        """
        if not self.scenario:
            raise ConfigurationError("a scenario is required")
        if not 0 < self.rel_tol <= 1e-3:
            raise ConfigurationError(f"tolerance must lie in (0, 1e-3], got {self.rel_tol}")
        for name, value in self.fixed.items():
            if not math.isfinite(value):
                raise ConfigurationError(f"parameter {name} must be finite, got {value}")
        if self.axis is not None:
            if self.axis.count < 2:
                raise ConfigurationError(f"axis {self.axis.name} needs at least 2 points")
            if not (math.isfinite(self.axis.start) and math.isfinite(self.axis.stop)):
                raise ConfigurationError(f"axis {self.axis.name} range must be finite")
            if self.axis.log and (self.axis.start <= 0 or self.axis.stop <= 0):
                raise ConfigurationError(f"log axis {self.axis.name} needs positive limits")
        names = [o.name for o in self.overlays] + ([self.axis.name] if self.axis else [])
        if len(set(names)) != len(names):
            raise ConfigurationError("a parameter may be swept or overlaid only once")
        for overlay in self.overlays:
            if not overlay.values:
                raise ConfigurationError(f"overlay {overlay.name} has no values")
            if not all(math.isfinite(v) for v in overlay.values):
                raise ConfigurationError(f"overlay {overlay.name} values must be finite")

    def parameter_names(self) -> List[str]:
        """Column order: axis, overlays, then remaining fixed parameters sorted."""
        leading = ([self.axis.name] if self.axis else []) + [o.name for o in self.overlays]
        return leading + sorted(k for k in self.fixed if k not in leading)

    def points(self) -> Iterator[Dict[str, float]]:
        """Parameter sets with overlays outermost and the axis innermost."""
        outer = itertools.product(*(o.values for o in self.overlays))
        axis_values = self.axis.values() if self.axis else [None]
        for combo in outer:
            for value in axis_values:
                params = dict(self.fixed)
                params.update({o.name: float(v) for o, v in zip(self.overlays, combo)})
                if self.axis is not None:
                    params[self.axis.name] = float(value)
                yield params

    def echo(self) -> Dict[str, object]:
        """Plain-data description for output metadata."""
        return {
            "scenario": self.scenario,
            "fixed": dict(sorted(self.fixed.items())),
            "axis": self.axis.to_text() if self.axis else None,
            "overlays": [o.to_text() for o in self.overlays],
            "rel_tol": self.rel_tol,
            "audit": self.audit,
        }


def _number(text: str, what: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ConfigurationError(f"{what}: {text!r} is not a number") from None


def parse_axis(text: str) -> Axis:
    """
    Parse `name:start:stop:count[:log|lin]`.

    Raises:
        ConfigurationError: On malformed input
    """
    parts = text.split(":")
    if len(parts) not in (4, 5):
        raise ConfigurationError(f"axis must be name:start:stop:count[:log], got {text!r}")
    name = parts[0].strip()
    if not name:
        raise ConfigurationError(f"axis name missing in {text!r}")
    try:
        count = int(parts[3])
    except ValueError:
        raise ConfigurationError(f"axis count must be an integer, got {parts[3]!r}") from None
    log = False
    if len(parts) == 5:
        mode = parts[4].strip().lower()
        if mode not in ("log", "lin", "linear"):
            raise ConfigurationError(f"axis spacing must be log or lin, got {parts[4]!r}")
        log = mode == "log"
    return Axis(name, _number(parts[1], "axis start"), _number(parts[2], "axis stop"), count, log)


def parse_overlay(text: str) -> Overlay:
    """
    Parse `name=v1,v2,...`.

    Raises:
        ConfigurationError: On malformed input
    """
    name, sep, values = text.partition("=")
    name = name.strip()
    if not sep or not name:
        raise ConfigurationError(f"overlay must be name=v1,v2,..., got {text!r}")
    items = [v for v in (s.strip() for s in values.split(",")) if v]
    return Overlay(name, tuple(_number(v, f"overlay {name}") for v in items))
