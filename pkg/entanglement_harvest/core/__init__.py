"""
Domain model and two-detector state.
"""
from .model import (
    CouplingModel, SwitchingProfile, GaussianIsotropic, GaussianHarmonic, HydrogenTransition,
    SmearingSpec, DetectorConfig, PairGeometry, chi_tilde_sq, q_factor, gaussian_ft,
    quadrupole_ft_tensor, coupling_from_mass, bohr_radius_for_gap,
    FINE_STRUCTURE, ELECTRON_MASS_PLANCK, HYDROGEN_MASS_PLANCK,
)
from .state import (
    TwoDetectorState, assemble_density_matrix, negativity, negativity_from_magnitudes,
    negativity_oracle, negativity_leading_order, partial_transpose,
)
