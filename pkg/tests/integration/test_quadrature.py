"""
Panelled Gauss-Kronrod quadrature, tails and the sphere rule.
"""
import math

import numpy as np
import pytest
from scipy import integrate

from entanglement_harvest.errors import ConvergenceError, DomainError
from entanglement_harvest.integration import (
    integrate_interval, integrate_oscillatory_tail, integrate_semi_infinite, rule_for_order,
    sphere_quadrature, sphere_rule, truncation_point,
)
from entanglement_harvest.special import AngularQuantum, spherical_harmonic


def test_interval_polynomial_and_trig():
    assert integrate_interval(np.sin, 0.0, math.pi).value.real == pytest.approx(2.0, rel=1e-12)
    result = integrate_interval(lambda k: k ** 5, 0.0, 2.0)
    assert result.value.real == pytest.approx(64.0 / 6.0, rel=1e-12)
    assert result.panels_used >= 1


def test_interval_complex_integrand():
    value = integrate_interval(lambda k: np.exp(1j * k), 0.0, math.pi / 2).value
    assert value == pytest.approx(1.0 + 1.0j, rel=1e-12)


def test_interval_rejects_empty_range():
    with pytest.raises(DomainError):
        integrate_interval(np.sin, 1.0, 1.0)


def test_panel_cap_raises_with_partial_result():
    with pytest.raises(ConvergenceError) as info:
        integrate_interval(lambda k: 1.0 / np.sqrt(k), 0.0, 1.0, rel_tol=1e-15, max_panels=4)
    assert info.value.partial is not None
    assert info.value.partial.panels_used == 4


def test_semi_infinite_gaussian_moment():
    result = integrate_semi_infinite(lambda k: k * k * np.exp(-k * k), 1.0, envelope_power=2.0)
    assert result.value.real == pytest.approx(math.sqrt(math.pi) / 4.0, rel=1e-9)
    assert result.truncation_k >= truncation_point(1.0, 1e-8, 2.0)


def test_semi_infinite_oscillating():
    a = 3.0
    result = integrate_semi_infinite(lambda k: np.exp(-k * k) * np.cos(a * k), 1.0, oscillation_scale=a)
    assert result.value.real == pytest.approx(0.5 * math.sqrt(math.pi) * math.exp(-a * a / 4.0), rel=1e-7)


def test_semi_infinite_validates_arguments():
    with pytest.raises(DomainError):
        integrate_semi_infinite(np.exp, 0.0)
    with pytest.raises(DomainError):
        integrate_semi_infinite(np.exp, 1.0, rel_tol=1e-2)


def test_truncation_point_formula():
    expected = math.sqrt(4.5) / 0.5 + math.sqrt(math.log(1.0 / (1e-8 * 1e-4))) / 0.5
    assert truncation_point(0.5, 1e-8, 9.0) == pytest.approx(expected)


@pytest.mark.parametrize("frequency", [1.0, 4.0, -2.5])
def test_oscillatory_tail_against_qawf(frequency):
    start = 1.5
    cos_part = integrate.quad(lambda k: 1.0 / k ** 2, start, np.inf, weight="cos", wvar=abs(frequency))[0]
    sin_part = integrate.quad(lambda k: 1.0 / k ** 2, start, np.inf, weight="sin", wvar=abs(frequency))[0]
    expected = cos_part + 1j * math.copysign(1.0, frequency) * sin_part
    result = integrate_oscillatory_tail(lambda k: 1.0 / k ** 2, start, frequency)
    assert result.value == pytest.approx(expected, rel=1e-7)


def test_oscillatory_tail_without_oscillation():
    result = integrate_oscillatory_tail(lambda k: 1.0 / k ** 2, 2.0, 0.0)
    assert result.value.real == pytest.approx(0.5, rel=1e-10)


def test_sphere_rule_weights_sum_to_solid_angle():
    rule = sphere_rule(7, 13)
    assert rule.weights.sum() == pytest.approx(4.0 * math.pi)
    np.testing.assert_allclose(np.linalg.norm(rule.directions, axis=-1), 1.0)


def test_sphere_quadrature_orthonormality():
    y21 = AngularQuantum(2, 1)
    y20 = AngularQuantum(2, 0)
    norm = sphere_quadrature(lambda t, p: np.abs(spherical_harmonic(y21, t, p)) ** 2, 8)
    cross = sphere_quadrature(
        lambda t, p: spherical_harmonic(y21, t, p) * np.conj(spherical_harmonic(y20, t, p)), 8)
    assert norm == pytest.approx(1.0, rel=1e-13)
    assert abs(cross) < 1e-14


def test_rule_for_order_rejects_low_orders():
    with pytest.raises(DomainError):
        rule_for_order(2)
