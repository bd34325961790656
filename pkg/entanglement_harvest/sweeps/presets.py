"""
Named sweeps for the standard negativity curve families.

Unless stated otherwise sigma = 0.2 T and the separations L/T are 4, 6, 8, 10.
"""
import math
from dataclasses import dataclass
from typing import Dict

from ..errors import ConfigurationError
from .spec import Axis, Overlay, SweepSpec

SEPARATIONS = Overlay("L", (4.0, 6.0, 8.0, 10.0))
OMEGA_AXIS = Axis("omega", 0.0, 15.0, 151)
HYDROGEN_OMEGA_AXIS = Axis("omega", 0.1, 15.0, 150)
SIGMA_AXIS = Axis("sigma", 0.05, 0.5, 46)
ANGLE_AXIS = Axis("theta", 0.0, math.pi, 91)


@dataclass(frozen=True)
class Preset:
    """
    Attributes:
        name (str): Identifier used on the command line
        description (str): What the curve family shows
        spec (SweepSpec): The sweep
    """
    name: str
    description: str
    spec: SweepSpec


def _preset(name, description, scenario, fixed, axis, overlays=(SEPARATIONS,)) -> Preset:
    return Preset(name, description, SweepSpec(scenario, dict(fixed), axis, list(overlays)))


PRESETS: Dict[str, Preset] = {p.name: p for p in (
    _preset("fig-gravity-gaussian-omega", "isotropic gravity: negativity vs gap",
            "gravity-gaussian", {"sigma": 0.2}, OMEGA_AXIS),
    _preset("fig-gravity-gaussian-omega-sigma", "isotropic gravity: negativity vs gap per size",
            "gravity-gaussian", {"L": 8.0}, OMEGA_AXIS,
            (Overlay("sigma", (0.1, 0.2, 0.3, 0.4, 0.5)),)),
    _preset("fig-gravity-gaussian-sigma", "isotropic gravity: negativity vs size",
            "gravity-gaussian", {"omega": 4.7}, SIGMA_AXIS),
    _preset("fig-gravity-l2-omega", "l = 2 gravity: negativity vs gap",
            "gravity-l2", {"sigma": 0.2, "theta": 0.0}, OMEGA_AXIS),
    _preset("fig-gravity-l2-angle", "l = 2 gravity: negativity vs relative angle",
            "gravity-l2", {"sigma": 0.2, "omega": 6.0}, ANGLE_AXIS),
    _preset("fig-qscalar-omega", "second-derivative scalar: negativity vs gap",
            "qscalar", {"sigma": 0.2}, OMEGA_AXIS),
    _preset("fig-qscalar-sigma", "second-derivative scalar: negativity vs size",
            "qscalar", {"omega": 4.7}, SIGMA_AXIS),
    _preset("fig-scalar-omega", "linear scalar: negativity vs gap",
            "scalar", {"sigma": 0.2}, OMEGA_AXIS),
    _preset("fig-scalar-sigma", "linear scalar: negativity vs size",
            "scalar", {"omega": 4.7}, SIGMA_AXIS),
    _preset("fig-qscalar-l2-omega", "l = 2 second-derivative scalar: negativity vs gap",
            "qscalar-l2", {"sigma": 0.2, "theta": 0.0}, OMEGA_AXIS),
    _preset("fig-qscalar-l2-angle", "l = 2 second-derivative scalar: negativity vs angle",
            "qscalar-l2", {"sigma": 0.2, "omega": 6.0}, ANGLE_AXIS),
    _preset("fig-hydrogen-200-omega", "hydrogen 1s -> 2s: negativity vs gap",
            "hydrogen-200", {}, HYDROGEN_OMEGA_AXIS),
    _preset("fig-hydrogen-300-omega", "hydrogen 1s -> 3s: negativity vs gap",
            "hydrogen-300", {}, HYDROGEN_OMEGA_AXIS),
    _preset("fig-hydrogen-320-omega", "hydrogen 1s -> 3d: negativity vs gap",
            "hydrogen-320", {"theta": 0.0}, HYDROGEN_OMEGA_AXIS),
    _preset("fig-hydrogen-320-angle", "hydrogen 1s -> 3d: negativity vs angle",
            "hydrogen-320", {"omega": 7.0, "L": 4.0}, ANGLE_AXIS, ()),
)}


def get_preset(name: str) -> Preset:
    """
    Raises:
        ConfigurationError: For an unknown preset
    """
    try:
        return PRESETS[name]
    except KeyError:
        raise ConfigurationError(
            f"unknown preset {name!r}; run `harvest preset --list` for the names") from None
