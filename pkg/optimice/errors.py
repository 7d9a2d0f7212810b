"""Exceptions raised across the package.

Every error derives from ValueError so callers that only know about invalid inputs
still catch them.
"""

import numpy as np


class OptimiceError(ValueError):
    """Base class for all package errors."""


class ConfigurationError(OptimiceError):
    """Invalid kernel, optimizer or campaign settings."""


class NumericalFailureError(OptimiceError, ArithmeticError):
    """Covariance matrix could not be factorized even after jitter escalation.

    Attributes:
        jitter_ladder (list[float]): Relative jitters tried, in order.
    """

    def __init__(self, message: str, jitter_ladder: list[float]) -> None:
        super().__init__(f'{message} (jitter ladder tried: {jitter_ladder})')
        self.jitter_ladder = list(jitter_ladder)


class DegenerateGeometryError(OptimiceError):
    """A conditional variance collapsed while scoring a candidate."""

    def __init__(self, message: str, point: np.ndarray) -> None:
        super().__init__(f'{message} at point {np.asarray(point).tolist()}')
        self.point = np.asarray(point)


class DomainError(OptimiceError):
    """A point lies outside the box it must belong to."""


class ZeroOptimumError(OptimiceError):
    """Relative error is undefined for a zero optimum; compare against targets."""


class ObjectiveError(OptimiceError):
    """The objective returned a non-finite value."""

    def __init__(self, point: np.ndarray, value: float) -> None:
        super().__init__(
            f'Objective returned {value!r} at point {np.asarray(point).tolist()}',
        )
        self.point = np.asarray(point)
        self.value = value
