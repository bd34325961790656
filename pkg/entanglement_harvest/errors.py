"""
Exception hierarchy for the entanglement harvesting package.
"""
from typing import Any, Optional


class HarvestError(Exception):
    """Base class for every error raised by the package."""


class DomainError(HarvestError, ValueError):
    """
    Raised when an input lies outside the domain of an operation.

    Examples are invalid quantum numbers, a non-unit direction vector,
    a negative energy gap or a non-positive length scale.
    """


class UnsupportedOrderError(DomainError):
    """Raised when an angular momentum index exceeds a documented cap."""


class UnsupportedScenarioError(HarvestError):
    """Raised when a kernel or oracle is asked for a configuration it cannot build."""


class SingularGeometryError(HarvestError):
    """Raised when a kernel prefactor is singular at the requested geometry."""


class ConvergenceError(HarvestError):
    """
    Raised when adaptive quadrature hits its panel cap.

    Attributes:
        partial (Any): The best QuadratureResult reached before giving up
    """
    def __init__(self, message: str, partial: Optional[Any] = None):
        """
        Initialize the error.

        Args:
            message: Human readable description
            partial: Partial quadrature result
        """
        super().__init__(message)
        self.partial = partial


class NumericError(HarvestError):
    """Raised when a linear algebra routine fails."""


class ConfigurationError(HarvestError):
    """Raised for bad command-line flags, config files or environment values."""


class PerturbativityWarning(UserWarning):
    """Warned when L_AA + L_BB exceeds one and second-order results are unreliable."""
