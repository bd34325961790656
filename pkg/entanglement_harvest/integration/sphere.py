"""
Product quadrature on the unit sphere.

Gauss-Legendre nodes in cos(theta) times a uniform azimuthal grid.
"""
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..errors import DomainError


@dataclass(frozen=True)
class SphereRule:
    """
    Nodes and weights of a product rule on S^2.

    Attributes:
        theta (np.ndarray): Polar angles, shape (n_theta, n_phi)
        phi (np.ndarray): Azimuthal angles, shape (n_theta, n_phi)
        weights (np.ndarray): Weights summing to 4 pi, shape (n_theta, n_phi)
    """
    theta: np.ndarray
    phi: np.ndarray
    weights: np.ndarray

    @property
    def directions(self) -> np.ndarray:
        """Unit vectors of shape (n_theta, n_phi, 3)."""
        st = np.sin(self.theta)
        return np.stack([st * np.cos(self.phi), st * np.sin(self.phi), np.cos(self.theta)], axis=-1)


def sphere_rule(n_theta: int, n_phi: int) -> SphereRule:
    """
    Build a product rule with n_theta polar and n_phi azimuthal points.

    The rule integrates exactly every polynomial in cos(theta) of degree up to
    2 n_theta - 1 times every trigonometric polynomial in phi of degree below n_phi.
    """
    if n_theta < 1 or n_phi < 1:
        raise DomainError(f"sphere rule needs positive sizes, got {n_theta}x{n_phi}")
    mu, w_mu = np.polynomial.legendre.leggauss(n_theta)
    phi = 2.0 * np.pi * np.arange(n_phi) / n_phi
    theta_grid, phi_grid = np.meshgrid(np.arccos(mu), phi, indexing="ij")
    weights = np.outer(w_mu, np.full(n_phi, 2.0 * np.pi / n_phi))
    return SphereRule(theta_grid, phi_grid, weights)


def rule_for_order(order: int) -> SphereRule:
    """Product rule exact for spherical-harmonic content up to degree `order`."""
    if order < 4:
        raise DomainError(f"sphere quadrature order must be at least 4, got {order}")
    return sphere_rule(order // 2 + 1, order + 1)


def sphere_quadrature(g: Callable[[np.ndarray, np.ndarray], np.ndarray], order: int) -> complex:
    """
    Integrate g(theta, phi) over the unit sphere.

    Args:
        g: Vectorized function of (theta, phi) grids
        order: Harmonic degree integrated exactly, at least 4

    Returns:
        complex: The solid-angle integral
    """
    rule = rule_for_order(order)
    values = np.asarray(g(rule.theta, rule.phi))
    return complex(np.sum(values * rule.weights))
