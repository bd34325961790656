"""
Quadrature over the momentum half-line and the unit sphere.
"""
from .gauss_kronrod import (
    QuadratureResult, integrate_interval, integrate_semi_infinite,
    integrate_oscillatory_tail, truncation_point, MAX_PANELS, TAIL_FACTOR,
)
from .sphere import SphereRule, sphere_rule, rule_for_order, sphere_quadrature
