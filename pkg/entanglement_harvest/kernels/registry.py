"""
Scenario identifiers and their kernel builders.
"""
from typing import Callable, Dict

from ..core.model import DetectorConfig, GaussianHarmonic, HydrogenTransition, PairGeometry
from ..errors import UnsupportedScenarioError
from .base import SpectralKernelSet
from .gravity import gravity_gaussian_kernels, gravity_l2_kernels
from .radial import general_radial_kernels, hydrogen_320_kernels
from .scalar import qscalar_kernels, scalar_kernels


def _radial_from_smearing(A: DetectorConfig, B: DetectorConfig, geo: PairGeometry,
                          sigma_scale: float) -> SpectralKernelSet:
    smearing = A.smearing
    if isinstance(smearing, HydrogenTransition):
        return general_radial_kernels(smearing.radial_product, smearing.angular, A, B, geo)
    if isinstance(smearing, GaussianHarmonic):
        return general_radial_kernels(smearing.radial_profile, smearing.angular, A, B, geo)
    raise UnsupportedScenarioError(
        f"general-radial kernels need a harmonic or hydrogen smearing, got {type(smearing).__name__}")


def _simple(builder: Callable) -> Callable:
    def build(A, B, geo, sigma_scale):
        return builder(A, B, geo)
    return build


def _hydrogen_320(A, B, geo, sigma_scale):
    return hydrogen_320_kernels(A, B, geo, sigma_scale=sigma_scale)


BUILDERS: Dict[str, Callable] = {
    "scalar": _simple(scalar_kernels),
    "qscalar": _simple(qscalar_kernels),
    "qscalar-l2": _simple(qscalar_kernels),
    "gravity-gaussian": _simple(gravity_gaussian_kernels),
    "gravity-l2": _simple(gravity_l2_kernels),
    "hydrogen-320": _hydrogen_320,
    "hydrogen-200": _radial_from_smearing,
    "hydrogen-300": _radial_from_smearing,
    "general-radial": _radial_from_smearing,
}


def build_kernels(scenario: str, A: DetectorConfig, B: DetectorConfig, geo: PairGeometry,
                  sigma_scale: float = 1.0) -> SpectralKernelSet:
    """
    Build the kernel set of a named scenario.

    Args:
        scenario: One of BUILDERS
        A: First detector
        B: Second detector
        geo: Pair geometry
        sigma_scale: Hydrogen length scale in units of a0

    Raises:
        UnsupportedScenarioError: For an unknown identifier
    """
    try:
        builder = BUILDERS[scenario]
    except KeyError:
        raise UnsupportedScenarioError(
            f"unknown scenario {scenario!r}; known: {', '.join(sorted(BUILDERS))}") from None
    return builder(A, B, geo, sigma_scale)
