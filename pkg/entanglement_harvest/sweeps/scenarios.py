"""
Scenario identifiers mapped to detector pairs, geometry and coupling model.

Parameters are dimensionless with T = 1 unless `T` is given: omega is
Omega T, L is L/T, sigma is sigma/T and theta, psi, phi are the Euler
angles of detector B in radians.
"""
from dataclasses import dataclass
from typing import Callable, Dict, Mapping, Tuple

from ..core.model import (
    FINE_STRUCTURE, CouplingModel, DetectorConfig, GaussianHarmonic, GaussianIsotropic,
    HydrogenTransition, PairGeometry, SwitchingProfile, bohr_radius_for_gap,
)
from ..errors import ConfigurationError
from ..special.harmonics import AngularQuantum

DEFAULTS: Dict[str, float] = {
    "omega": 4.7,
    "L": 8.0,
    "sigma": 0.2,
    "theta": 0.0,
    "psi": 0.0,
    "phi": 0.0,
    "T": 1.0,
    "lam": 1.0,
    "alpha": FINE_STRUCTURE,
    "sigma_scale": 1.0,
    "printed_radial": 0.0,
    "l": 2.0,
    "m": 0.0,
}


@dataclass(frozen=True)
class Scenario:
    """
    Attributes:
        name (str): Identifier
        model (CouplingModel): Field coupling, used by the oracle
        smearing (Callable): Builds the smearing from the parameter mapping
        description (str): One line for listings
    """
    name: str
    model: CouplingModel
    smearing: Callable[[Mapping[str, float]], object]
    description: str


def _isotropic(p):
    return GaussianIsotropic(p["sigma"] * p["T"])


def _harmonic_20(p):
    return GaussianHarmonic(p["sigma"] * p["T"], AngularQuantum(2, 0))


def _harmonic_lm(p):
    return GaussianHarmonic(p["sigma"] * p["T"], AngularQuantum(int(p["l"]), int(p["m"])))


def _hydrogen(excited: Tuple[int, int, int]):
    def build(p):
        a0 = bohr_radius_for_gap(p["omega"] / p["T"], p["alpha"])
        return HydrogenTransition((1, 0, 0), excited, a0, bool(p["printed_radial"]))
    return build


SCENARIOS: Dict[str, Scenario] = {s.name: s for s in (
    Scenario("scalar", CouplingModel.SCALAR_LINEAR, _isotropic,
             "linear scalar coupling, Gaussian smearing"),
    Scenario("qscalar", CouplingModel.SCALAR_QUADRUPOLE, _isotropic,
             "second-derivative scalar coupling, |x|^2 Gaussian smearing"),
    Scenario("qscalar-l2", CouplingModel.SCALAR_QUADRUPOLE, _harmonic_20,
             "second-derivative scalar coupling, l = 2 Gaussian smearing"),
    Scenario("gravity-gaussian", CouplingModel.GRAVITY_QUADRUPOLE, _isotropic,
             "gravitational coupling, isotropic Gaussian quadrupole"),
    Scenario("gravity-l2", CouplingModel.GRAVITY_QUADRUPOLE, _harmonic_20,
             "gravitational coupling, l = 0 -> 2 Gaussian transition"),
    Scenario("general-radial", CouplingModel.GRAVITY_QUADRUPOLE, _harmonic_lm,
             "gravitational coupling, Gaussian radial profile with harmonic (l, m)"),
    Scenario("hydrogen-200", CouplingModel.GRAVITY_QUADRUPOLE, _hydrogen((2, 0, 0)),
             "gravitational coupling, hydrogen 1s -> 2s"),
    Scenario("hydrogen-300", CouplingModel.GRAVITY_QUADRUPOLE, _hydrogen((3, 0, 0)),
             "gravitational coupling, hydrogen 1s -> 3s"),
    Scenario("hydrogen-320", CouplingModel.GRAVITY_QUADRUPOLE, _hydrogen((3, 2, 0)),
             "gravitational coupling, hydrogen 1s -> 3d (m = 0)"),
)}


def get_scenario(name: str) -> Scenario:
    """
    Raises:
        ConfigurationError: For an unknown identifier
    """
    try:
        return SCENARIOS[name]
    except KeyError:
        raise ConfigurationError(
            f"unknown scenario {name!r}; known: {', '.join(sorted(SCENARIOS))}") from None


def resolve_parameters(params: Mapping[str, float]) -> Dict[str, float]:
    """
    Merge params over DEFAULTS.

    Raises:
        ConfigurationError: For unknown parameter names
    """
    unknown = sorted(set(params) - set(DEFAULTS))
    if unknown:
        raise ConfigurationError(
            f"unknown parameter(s) {', '.join(unknown)}; known: {', '.join(sorted(DEFAULTS))}")
    merged = dict(DEFAULTS)
    merged.update(params)
    return merged


def build_pair(name: str, params: Mapping[str, float]
               ) -> Tuple[DetectorConfig, DetectorConfig, PairGeometry]:
    """
    Identical detectors A and B plus their geometry for a scenario.

    Raises:
        ConfigurationError: For unknown scenarios or parameters
        DomainError: For out-of-domain values
    """
    scenario = get_scenario(name)
    p = resolve_parameters(params)
    switching = SwitchingProfile(p["T"])
    smearing = scenario.smearing(p)
    detector = DetectorConfig(p["lam"], p["omega"] / p["T"], smearing, switching)
    geo = PairGeometry(p["L"] * p["T"], p["psi"], p["theta"], p["phi"])
    return detector, detector, geo
