"""
Independent brute-force references: momentum-space integrals with explicit
polarization tensors, the time-domain Q and exact 3j symbols.
"""
from .polarization import PolarizationBasis, polarization_basis, tt_projector
from .momentum import MomentumOracle, l_momentum_oracle, m_momentum_oracle
from .time_domain import q_time_oracle
from .racah import racah_3j_exact, racah_3j_squared
