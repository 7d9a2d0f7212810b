"""Latin hypercube designs and box domains.

Initial designs are maximin Latin hypercubes chosen among random restarts; search
sets are single Latin hypercube draws. All draws go through an explicit numpy
Generator so that a trial seeded once is reproducible end to end.
"""

from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import pdist
from scipy.stats import qmc

from optimice.errors import ConfigurationError, DomainError

Seed = int | np.random.Generator | None

# Unit-cube points are accepted this far outside [0, 1] to absorb round-off.
UNIT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class BoxDomain:
    """Axis-aligned box lower[i] <= x[i] <= upper[i]."""

    lower: tuple[float, ...]
    upper: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, 'lower', tuple(float(v) for v in self.lower))
        object.__setattr__(self, 'upper', tuple(float(v) for v in self.upper))
        if len(self.lower) != len(self.upper) or not self.lower:
            raise ConfigurationError(
                f'Bounds must be non-empty and of equal length, got '
                f'{len(self.lower)} and {len(self.upper)}',
            )
        if any(lo >= up for lo, up in zip(self.lower, self.upper)):
            raise ConfigurationError(
                f'Each lower bound must be below its upper bound: {self}',
            )

    @classmethod
    def unit(cls, dim: int) -> 'BoxDomain':
        return cls((0.0,) * dim, (1.0,) * dim)

    @property
    def dim(self) -> int:
        return len(self.lower)

    @property
    def lb(self) -> np.ndarray:
        return np.array(self.lower)

    @property
    def ub(self) -> np.ndarray:
        return np.array(self.upper)

    @property
    def width(self) -> np.ndarray:
        return self.ub - self.lb

    def to_unit(self, points: np.ndarray) -> np.ndarray:
        """Map domain points to unit-cube coordinates (inverse of scale_to_domain)."""
        return (np.asarray(points, dtype=float) - self.lb) / self.width

    def contains(self, points: np.ndarray) -> np.ndarray | bool:
        """Membership test with a small relative tolerance on every face."""
        points = np.asarray(points, dtype=float)
        tol = UNIT_TOLERANCE * self.width
        inside = (points >= self.lb - tol) & (points <= self.ub + tol)
        result = inside.all(axis=-1)
        return bool(result) if points.ndim == 1 else result

    def rescaled(self, factor: float) -> 'BoxDomain':
        """Domain of x such that factor * x lies in this domain."""
        return BoxDomain(tuple(self.lb / factor), tuple(self.ub / factor))


def min_pairwise_distance(points: np.ndarray) -> float:
    """Smallest Euclidean distance between two rows; inf for a single row."""
    points = np.atleast_2d(points)
    if points.shape[0] < 2:  # noqa: PLR2004
        return float('inf')
    return float(pdist(points).min())


def lhs_maximin(n: int, d: int, seed: Seed = None, restarts: int = 100) -> np.ndarray:
    """Maximin Latin hypercube design in [0, 1]^d.

    Draws `restarts` random Latin hypercubes from the seed stream and keeps the one
    with the largest minimum pairwise distance (first one on ties).

    Args:
        n (int): Number of points.
        d (int): Dimension.
        seed (int | np.random.Generator | None): Seed or generator to draw from.
        restarts (int): Number of random designs compared.

    Returns:
        np.ndarray: n x d design.

    Raises:
        ConfigurationError: If n, d or restarts is smaller than 1.
    """
    if n < 1 or d < 1 or restarts < 1:
        raise ConfigurationError(
            f'lhs_maximin needs n, d, restarts >= 1, got {n}, {d}, {restarts}',
        )
    rng = np.random.default_rng(seed)
    engine = qmc.LatinHypercube(d=d, seed=rng)
    best = engine.random(n)
    best_distance = min_pairwise_distance(best)
    for _ in range(restarts - 1):
        design = engine.random(n)
        distance = min_pairwise_distance(design)
        if distance > best_distance:
            best, best_distance = design, distance
    return best


def scale_to_domain(unit_points: np.ndarray, domain: BoxDomain) -> np.ndarray:
    """Affine map lower + u * (upper - lower) per coordinate.

    Raises:
        DomainError: If any coordinate lies outside [0, 1].
    """
    unit_points = np.asarray(unit_points, dtype=float)
    if np.any(unit_points < -UNIT_TOLERANCE) or np.any(
        unit_points > 1 + UNIT_TOLERANCE,
    ):
        raise DomainError('Unit points must lie in [0, 1]^d')
    return domain.lb + np.clip(unit_points, 0.0, 1.0) * domain.width


def sample_search_set(n: int, domain: BoxDomain, seed: Seed = None) -> np.ndarray:
    """Single Latin hypercube draw of n points scaled to the domain.

    Successive calls differ only when they share a Generator; an int seed gives
    the same set every time. The optimizer passes its per-trial generator.
    """
    return scale_to_domain(lhs_maximin(n, domain.dim, seed, restarts=1), domain)
