"""Separable correlation functions.

Both families are products over dimensions of a one-dimensional correlation of the
scaled distance h_i = |x_i - x'_i| / l_i:

- power exponential: exp(-h_i ** p), p in (0, 2], p = 2 being the default
- Matern: closed forms for smoothness 3/2 and 5/2
"""

from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from optimice.errors import ConfigurationError

MATERN_SMOOTHNESS = (1.5, 2.5)


class KernelFamily(str, Enum):
    POWER_EXPONENTIAL = 'power_exponential'
    MATERN = 'matern'


@dataclass(frozen=True)
class KernelConfig:
    """Kernel family and its hyperparameters.

    Attributes:
        family (KernelFamily): Correlation family.
        lengthscales (tuple[float, ...]): One positive lengthscale per dimension.
        power (float): Exponent p of the power exponential family.
        smoothness (float): Matern smoothness, 1.5 or 2.5.
    """

    family: KernelFamily = KernelFamily.POWER_EXPONENTIAL
    lengthscales: tuple[float, ...] = (1.0,)
    power: float = 2.0
    smoothness: float = 2.5

    def __post_init__(self) -> None:
        object.__setattr__(self, 'family', KernelFamily(self.family))
        object.__setattr__(
            self, 'lengthscales', tuple(float(v) for v in self.lengthscales)
        )
        if not self.lengthscales or min(self.lengthscales) <= 0:
            raise ConfigurationError(
                f'Lengthscales must be strictly positive, got {self.lengthscales}',
            )
        if not 0 < self.power <= 2:  # noqa: PLR2004
            raise ConfigurationError(f'Power must lie in (0, 2], got {self.power}')
        if self.smoothness not in MATERN_SMOOTHNESS:
            raise ConfigurationError(
                f'Matern smoothness must be one of {MATERN_SMOOTHNESS}, '
                f'got {self.smoothness}',
            )

    @property
    def dim(self) -> int:
        return len(self.lengthscales)

    def with_lengthscales(self, lengthscales: np.ndarray) -> 'KernelConfig':
        return replace(self, lengthscales=tuple(np.asarray(lengthscales, dtype=float)))


def _matern(h: np.ndarray, smoothness: float) -> np.ndarray:
    if smoothness == 1.5:  # noqa: PLR2004
        s = np.sqrt(3.0) * h
        return (1.0 + s) * np.exp(-s)
    s = np.sqrt(5.0) * h
    return (1.0 + s + s**2 / 3.0) * np.exp(-s)


def correlation_matrix(a: np.ndarray, b: np.ndarray, cfg: KernelConfig) -> np.ndarray:
    """Correlations between every row of `a` and every row of `b`.

    Args:
        a (np.ndarray): m x d points.
        b (np.ndarray): n x d points.
        cfg (KernelConfig): Kernel with d lengthscales.

    Returns:
        np.ndarray: m x n matrix with entries in (0, 1].
    """
    a = np.atleast_2d(np.asarray(a, dtype=float))
    b = np.atleast_2d(np.asarray(b, dtype=float))
    if a.shape[1] != cfg.dim or b.shape[1] != cfg.dim:
        raise ConfigurationError(
            f'Points of dimension {a.shape[1]}/{b.shape[1]} do not match '
            f'{cfg.dim} lengthscales',
        )
    if cfg.family is KernelFamily.POWER_EXPONENTIAL:
        exponent = np.zeros((a.shape[0], b.shape[0]))
        for i, lengthscale in enumerate(cfg.lengthscales):
            h = np.abs(a[:, None, i] - b[None, :, i]) / lengthscale
            exponent += h**cfg.power
        return np.exp(-exponent)
    corr = np.ones((a.shape[0], b.shape[0]))
    for i, lengthscale in enumerate(cfg.lengthscales):
        h = np.abs(a[:, None, i] - b[None, :, i]) / lengthscale
        corr *= _matern(h, cfg.smoothness)
    return corr


def kernel_correlation(x: np.ndarray, x2: np.ndarray, cfg: KernelConfig) -> float:
    """Correlation between two single points."""
    return float(correlation_matrix(np.atleast_2d(x), np.atleast_2d(x2), cfg)[0, 0])
