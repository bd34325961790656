"""
Spectral kernels for L and M, one family per coupling and smearing.
"""
from .base import (
    KernelIntegrals, OscillatoryTail, SpectralKernelSet, integrate_kernels, state_from_kernels,
)
from .gravity import gravity_gaussian_kernels, gravity_l2_kernels
from .radial import RadialProduct, general_radial_kernels, hydrogen_320_kernels
from .registry import BUILDERS, build_kernels
from .scalar import angle_factor, qscalar_kernels, scalar_kernels
