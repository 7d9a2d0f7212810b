"""Exploration parameter schedule, confidence bounds and acquisition functions.

All functions accept scalars or arrays and broadcast.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.stats import norm

from optimice.emulator.gaussian_process import GpModel, Prediction
from optimice.errors import ConfigurationError

DEFAULT_DELTA = 0.1


class BetaKind(str, Enum):
    FINITE = 'finite'
    CONSTANT = 'constant'


def beta_schedule(
    t: int,
    delta: float = DEFAULT_DELTA,
    search_size: int = 10_000,
) -> float:
    """Finite-set schedule 2 log(N t^2 pi^2 / (6 delta)).

    Raises:
        ConfigurationError: If t < 1 or delta is outside (0, 1).
    """
    if t < 1:
        raise ConfigurationError(f'Iteration index starts at 1, got {t}')
    if not 0 < delta < 1:
        raise ConfigurationError(f'delta must lie in (0, 1), got {delta}')
    return float(2.0 * np.log(search_size * t**2 * np.pi**2 / (6.0 * delta)))


@dataclass(frozen=True)
class BetaSchedule:
    """Either the finite-set schedule or a constant value."""

    kind: BetaKind = BetaKind.FINITE
    delta: float = DEFAULT_DELTA
    value: float = 4.0

    def __post_init__(self) -> None:
        object.__setattr__(self, 'kind', BetaKind(self.kind))
        if not 0 < self.delta < 1:
            raise ConfigurationError(f'delta must lie in (0, 1), got {self.delta}')
        if self.value < 0:
            raise ConfigurationError(f'beta must be >= 0, got {self.value}')

    def at(self, t: int, search_size: int) -> float:
        if self.kind is BetaKind.CONSTANT:
            return float(self.value)
        return beta_schedule(t, self.delta, search_size)


@dataclass(frozen=True)
class ConfidenceBounds:
    upper: float | np.ndarray
    lower: float | np.ndarray
    beta: float


def confidence_bounds(prediction: Prediction, beta: float) -> ConfidenceBounds:
    """mean +/- sqrt(beta) * sd."""
    if beta < 0:
        raise ConfigurationError(f'beta must be >= 0, got {beta}')
    half_width = np.sqrt(beta) * np.sqrt(np.maximum(prediction.variance, 0.0))
    return ConfidenceBounds(
        upper=prediction.mean + half_width,
        lower=prediction.mean - half_width,
        beta=beta,
    )


def probability_of_improvement(
    prediction: Prediction,
    incumbent: float,
    beta: float = 0.0,
) -> float | np.ndarray:
    """Phi((mean - incumbent - beta) / sd); a step function where sd = 0."""
    improvement = np.asarray(prediction.mean - incumbent - beta, dtype=float)
    sd = np.sqrt(np.maximum(np.asarray(prediction.variance, dtype=float), 0.0))
    with np.errstate(divide='ignore', invalid='ignore'):
        pi = np.where(
            sd > 0,
            norm.cdf(improvement / np.where(sd > 0, sd, 1.0)),
            (improvement > 0).astype(float),
        )
    return float(pi) if pi.ndim == 0 else pi


def expected_improvement(
    prediction: Prediction,
    incumbent: float,
    beta: float = 0.0,
) -> float | np.ndarray:
    """(mean - incumbent - beta) Phi(z) + sd phi(z).

    Where sd = 0 this is max(mean - incumbent - beta, 0).
    """
    improvement = np.asarray(prediction.mean - incumbent - beta, dtype=float)
    sd = np.sqrt(np.maximum(np.asarray(prediction.variance, dtype=float), 0.0))
    safe_sd = np.where(sd > 0, sd, 1.0)
    z = improvement / safe_sd
    ei = np.where(
        sd > 0,
        improvement * norm.cdf(z) + sd * norm.pdf(z),
        np.maximum(improvement, 0.0),
    )
    ei = np.maximum(ei, 0.0)
    return float(ei) if ei.ndim == 0 else ei


def ucb_index(bounds: ConfidenceBounds, eligible: np.ndarray | None = None) -> int:
    """Index of the largest upper bound, lowest index on ties."""
    upper = np.atleast_1d(bounds.upper)
    if eligible is not None and np.any(eligible):
        upper = np.where(eligible, upper, -np.inf)
    return int(np.argmax(upper))


def ucb_select(
    model: GpModel,
    search_points: np.ndarray,
    beta: float,
) -> tuple[int, np.ndarray]:
    """Search point maximizing mean + sqrt(beta) * sd."""
    search_points = np.atleast_2d(search_points)
    if search_points.shape[0] == 0:
        raise ConfigurationError('Search set is empty')
    index = ucb_index(confidence_bounds(model.predict_many(search_points), beta))
    return index, search_points[index]
