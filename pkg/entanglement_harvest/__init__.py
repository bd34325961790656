"""
Entanglement harvesting by localized detectors coupled to a scalar field or
to linearized gravity.
"""
__version__ = "0.1.0"

from .errors import (
    HarvestError, DomainError, UnsupportedOrderError, UnsupportedScenarioError,
    SingularGeometryError, ConvergenceError, NumericError, ConfigurationError,
    PerturbativityWarning,
)
from .core import (
    CouplingModel, SwitchingProfile, GaussianIsotropic, GaussianHarmonic, HydrogenTransition,
    DetectorConfig, PairGeometry, TwoDetectorState, negativity,
)
from .kernels import build_kernels, integrate_kernels, state_from_kernels
from .sweeps import SweepSpec, Axis, Overlay, run_sweep, emit, get_preset, PRESETS
