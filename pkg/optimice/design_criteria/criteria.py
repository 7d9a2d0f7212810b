"""Sequential design criteria scored over candidate sets.

- ALM: predictive variance given training and pending inputs
- ALC: mean variance reduction over a reference set from adding the candidate
- MICE: ALM variance divided by the candidate's variance conditioned on the other
  unselected candidates, with a nugget on their correlation diagonal

Scores share the model's hyperparameters; nothing is refitted here.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.linalg import cho_solve, solve_triangular

from optimice.emulator.gaussian_process import GpModel
from optimice.emulator.kernels import correlation_matrix
from optimice.emulator.linalg import factorize
from optimice.errors import ConfigurationError, DegenerateGeometryError

DEFAULT_NUGGET = 1.0
DEFAULT_GRID_CAP = 200
# Denominators below this fraction of the process variance are degenerate.
DEGENERATE_RATIO = 1e-12


class Criterion(str, Enum):
    ALM = 'ALM'
    ALC = 'ALC'
    MICE = 'MICE'


class Provenance(str, Enum):
    SEARCH_SET = 'search_set'
    RELEVANT_REGION = 'relevant_region'


@dataclass(frozen=True, eq=False)
class CandidateSet:
    """Points (domain coordinates) among which the next input is chosen."""

    points: np.ndarray
    provenance: Provenance = Provenance.SEARCH_SET

    def __post_init__(self) -> None:
        points = np.atleast_2d(np.asarray(self.points, dtype=float))
        if points.shape[0] < 1:
            raise ConfigurationError('A candidate set needs at least one point')
        if np.unique(points, axis=0).shape[0] != points.shape[0]:
            raise ConfigurationError('Candidate points must be distinct')
        object.__setattr__(self, 'points', points)
        object.__setattr__(self, 'provenance', Provenance(self.provenance))

    def __len__(self) -> int:
        return self.points.shape[0]

    def without(self, index: int) -> 'CandidateSet':
        return CandidateSet(np.delete(self.points, index, axis=0), self.provenance)


@dataclass(frozen=True)
class Selection:
    index: int
    point: np.ndarray
    score: float


def _as_points(points: np.ndarray | CandidateSet) -> np.ndarray:
    if isinstance(points, CandidateSet):
        return points.points
    return np.atleast_2d(np.asarray(points, dtype=float))


def _pending(model: GpModel, pending: np.ndarray | None) -> np.ndarray:
    if pending is None:
        return np.empty((0, model.design.dim))
    return np.asarray(pending, dtype=float).reshape(-1, model.design.dim)


def alm_scores(
    model: GpModel,
    pending: np.ndarray | None,
    candidates: np.ndarray | CandidateSet,
) -> np.ndarray:
    return model.augmented_variances(_pending(model, pending), _as_points(candidates))


def alm_score(model: GpModel, pending: np.ndarray | None, x: np.ndarray) -> float:
    """Predictive variance of x given training and pending inputs."""
    return float(alm_scores(model, pending, np.atleast_2d(x))[0])


def alc_scores(
    model: GpModel,
    pending: np.ndarray | None,
    candidates: np.ndarray | CandidateSet,
    reference: np.ndarray | None = None,
) -> np.ndarray:
    """Mean variance reduction over `reference` from adding each candidate.

    The reference set defaults to the candidates themselves.
    """
    pending = _pending(model, pending)
    points = _as_points(candidates)
    reference = points if reference is None else np.atleast_2d(reference)
    if reference.shape[0] == 0:
        raise ConfigurationError('ALC needs a non-empty reference set')
    before = model.augmented_variances(pending, reference)
    scores = np.empty(points.shape[0])
    for i, x in enumerate(points):
        after = model.augmented_variances(np.vstack([pending, x]), reference)
        scores[i] = np.mean(before - after)
    return scores


def alc_score(
    model: GpModel,
    pending: np.ndarray | None,
    x: np.ndarray,
    reference: np.ndarray,
) -> float:
    return float(alc_scores(model, pending, np.atleast_2d(x), reference)[0])


def _conditioning_subset(
    size: int,
    grid_cap: int,
    rng: np.random.Generator | int | None,
) -> np.ndarray:
    if size <= grid_cap:
        return np.arange(size)
    return np.sort(np.random.default_rng(rng).choice(size, grid_cap, replace=False))


def _check_denominators(
    model: GpModel,
    denominators: np.ndarray,
    points: np.ndarray,
) -> None:
    floor = DEGENERATE_RATIO * model.process_variance
    degenerate = np.flatnonzero(denominators < floor)
    if degenerate.size:
        raise DegenerateGeometryError(
            'MICE denominator collapsed',
            points[degenerate[0]],
        )


def mice_scores(
    model: GpModel,
    pending: np.ndarray | None,
    candidates: np.ndarray | CandidateSet,
    nugget: float = DEFAULT_NUGGET,
    grid_cap: int = DEFAULT_GRID_CAP,
    rng: np.random.Generator | int | None = None,
) -> np.ndarray:
    """MICE score of every candidate, the others forming its unselected set.

    The conditional variance of candidate j given the rest of the conditioning set
    is 1 / (M^-1)_jj with M the nugget-inflated correlation matrix of that set, so a
    single factorization scores every candidate. When there are more than
    `grid_cap` candidates the conditioning set is a random subset of that size;
    candidates outside it are conditioned on the whole subset.

    Args:
        model (GpModel): Fitted model.
        pending (np.ndarray, optional): Inputs already chosen in this batch.
        candidates (np.ndarray | CandidateSet): Unselected points.
        nugget (float): Diagonal inflation of the conditioning correlation matrix.
        grid_cap (int): Largest conditioning set.
        rng (np.random.Generator | int, optional): Draws the conditioning subset.

    Returns:
        np.ndarray: One score per candidate.

    Raises:
        DegenerateGeometryError: If a denominator falls below 1e-12 * sigma^2.
    """
    points = _as_points(candidates)
    numerators = alm_scores(model, pending, points)
    unit = model.design.to_unit(points)
    subset = _conditioning_subset(points.shape[0], grid_cap, rng)
    grid = unit[subset]
    factor, jitter = factorize(
        correlation_matrix(grid, grid, model.kernel) + nugget * np.eye(len(subset)),
        model.noise_ratio,
    )
    inverse_factor = solve_triangular(factor, np.eye(len(subset)), lower=True)
    conditional = np.empty(points.shape[0])
    conditional[subset] = 1.0 / np.sum(inverse_factor**2, axis=0)
    outside = np.setdiff1d(np.arange(points.shape[0]), subset)
    if outside.size:
        cross = solve_triangular(
            factor,
            correlation_matrix(grid, unit[outside], model.kernel),
            lower=True,
        )
        conditional[outside] = 1.0 + nugget + jitter - np.sum(cross**2, axis=0)
    denominators = model.process_variance * conditional
    _check_denominators(model, denominators, points)
    return numerators / denominators


def mice_score(
    model: GpModel,
    pending: np.ndarray | None,
    x: np.ndarray,
    unselected: CandidateSet,
    nugget: float = DEFAULT_NUGGET,
    grid_cap: int = DEFAULT_GRID_CAP,
    rng: np.random.Generator | int | None = None,
) -> float:
    """MICE score of x against an unselected set that does not contain x."""
    x = np.atleast_2d(np.asarray(x, dtype=float))
    numerator = alm_score(model, pending, x)
    subset = _conditioning_subset(len(unselected), grid_cap, rng)
    grid = model.design.to_unit(unselected.points[subset])
    factor, jitter = factorize(
        correlation_matrix(grid, grid, model.kernel) + nugget * np.eye(len(subset)),
        model.noise_ratio,
    )
    cross = correlation_matrix(grid, model.design.to_unit(x), model.kernel)[:, 0]
    conditional = 1.0 + nugget + jitter - cross @ cho_solve((factor, True), cross)
    denominator = np.array([model.process_variance * conditional])
    _check_denominators(model, denominator, x)
    return float(numerator / denominator[0])


def criterion_scores(
    criterion: Criterion,
    model: GpModel,
    pending: np.ndarray | None,
    candidates: np.ndarray | CandidateSet,
    *,
    reference: np.ndarray | None = None,
    nugget: float = DEFAULT_NUGGET,
    grid_cap: int = DEFAULT_GRID_CAP,
    rng: np.random.Generator | int | None = None,
) -> np.ndarray:
    criterion = Criterion(criterion)
    if criterion is Criterion.ALM:
        return alm_scores(model, pending, candidates)
    if criterion is Criterion.ALC:
        return alc_scores(model, pending, candidates, reference)
    return mice_scores(model, pending, candidates, nugget, grid_cap, rng)


def select_best(
    criterion: Criterion,
    model: GpModel,
    pending: np.ndarray | None,
    candidates: np.ndarray | CandidateSet,
    *,
    eligible: np.ndarray | None = None,
    **criterion_params,
) -> Selection:
    """Candidate with the highest score; the lowest index wins ties.

    Args:
        criterion (Criterion): Score to maximize.
        model (GpModel): Fitted model.
        pending (np.ndarray, optional): Inputs already chosen in this batch.
        candidates (np.ndarray | CandidateSet): Points to choose from.
        eligible (np.ndarray, optional): Boolean mask of selectable candidates.
        **criterion_params: reference, nugget, grid_cap, rng.

    Raises:
        ConfigurationError: If no candidate is eligible.
    """
    points = _as_points(candidates)
    scores = criterion_scores(criterion, model, pending, points, **criterion_params)
    if eligible is not None:
        scores = np.where(eligible, scores, -np.inf)
        if not np.any(eligible):
            raise ConfigurationError('No eligible candidate to select from')
    index = int(np.argmax(scores))
    return Selection(index=index, point=points[index], score=float(scores[index]))
