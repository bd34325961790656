"""
Special functions used by the kernels and oracles.
"""
from .bessel import spherical_bessel_j, MAX_ORDER
from .erfi import dawson, dawson_asymptotic, one_minus_erf_i_damped
from .harmonics import AngularQuantum, associated_legendre, spherical_harmonic, harmonic_at_direction
from .wigner import (
    wigner_3j, wigner_small_d, wigner_D, wigner_D_matrix,
    rotation_matrix, euler_from_matrix, relabel_euler,
)
from .hydrogen import associated_laguerre, hydrogen_radial
