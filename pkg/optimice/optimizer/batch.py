"""Selection of one batch: a UCB point, then pure exploration in the relevant region."""

import logging

import numpy as np
from scipy.spatial.distance import cdist

from optimice.acquisition.functions import confidence_bounds, ucb_index
from optimice.acquisition.relevant_region import region_from_bounds
from optimice.design_criteria.criteria import Criterion, criterion_scores, select_best
from optimice.emulator.gaussian_process import GpModel
from optimice.optimizer.config import ExploreVariant, OptimizerConfig
from optimice.optimizer.trace import Batch, SelectionTag

logger = logging.getLogger(__name__)

# Points closer than this (unit-cube metric) to an evaluated input are skipped.
DUPLICATE_TOLERANCE = 1e-10

EXPLORE_CRITERION = {
    ExploreVariant.MICE: Criterion.MICE,
    ExploreVariant.ALM: Criterion.ALM,
}


def fresh_mask(model: GpModel, points: np.ndarray) -> np.ndarray:
    """True for points not within DUPLICATE_TOLERANCE of a training input."""
    distances = cdist(
        model.design.to_unit(points),
        model.design.unit_inputs,
        'euclidean',
    )
    return distances.min(axis=1) > DUPLICATE_TOLERANCE


def select_batch(
    model: GpModel,
    search_points: np.ndarray,
    config: OptimizerConfig,
    t: int,
    rng: np.random.Generator | int | None = None,
) -> Batch:
    """Choose K points for iteration t.

    Slot 0 maximizes the upper confidence bound over the search set. The relevant
    region is every search point whose upper bound reaches the best lower bound; a
    random subset of min(n_cand, |region|) members, excluding the UCB point and
    evaluated inputs, is drawn once and slots 1..K-1 are filled greedily from it by
    the exploration criterion with the batch so far as pending inputs. Slots the
    subset cannot fill are chosen by ALM over the whole search set and the batch is
    flagged as region exhausted.

    Args:
        model (GpModel): Model fitted on every evaluation so far.
        search_points (np.ndarray): Search set of the iteration (domain coordinates).
        config (OptimizerConfig): Resolved settings.
        t (int): Iteration index, starting at 1.
        rng (np.random.Generator | int, optional): Draws the candidate subset.

    Returns:
        Batch: Selected points and bookkeeping.
    """
    rng = np.random.default_rng(rng)
    search_points = np.atleast_2d(search_points)
    n_search = search_points.shape[0]
    beta = config.beta.at(t, n_search)
    bounds = confidence_bounds(model.predict_many(search_points), beta)
    fresh = fresh_mask(model, search_points)
    chosen = [ucb_index(bounds, fresh)]
    tags = [SelectionTag.UCB]
    region = region_from_bounds(bounds)

    members = region.member_indices
    members = members[fresh[members] & (members != chosen[0])]
    n_cand = config.n_cand if config.n_cand is not None else n_search
    n_draw = min(n_cand, len(region), members.size)
    if config.batch_size == 1:
        n_draw = 0
    remaining = list(rng.choice(members, size=n_draw, replace=False)) if n_draw else []
    n_candidates = len(remaining)

    criterion = EXPLORE_CRITERION[config.explore_variant]
    while len(chosen) < config.batch_size and remaining:
        scores = criterion_scores(
            criterion,
            model,
            search_points[chosen],
            search_points[remaining],
            nugget=config.nugget,
            grid_cap=config.mice_grid_cap,
            rng=rng,
        )
        chosen.append(int(remaining.pop(int(np.argmax(scores)))))
        tags.append(SelectionTag.PE)

    region_exhausted = len(chosen) < config.batch_size
    if region_exhausted:
        logger.warning(
            f'Iteration {t}: relevant region of {len(region)} points filled '
            f'{len(chosen) - 1} of {config.batch_size - 1} exploration slots, '
            'falling back to ALM over the search set',
        )
    while len(chosen) < config.batch_size:
        unused = np.ones(n_search, dtype=bool)
        unused[chosen] = False
        eligible = unused & fresh if np.any(unused & fresh) else unused
        selection = select_best(
            Criterion.ALM,
            model,
            search_points[chosen],
            search_points,
            eligible=eligible,
        )
        chosen.append(selection.index)
        tags.append(SelectionTag.PE)

    indices = np.array(chosen)
    return Batch(
        points=search_points[indices],
        indices=indices,
        tags=tags,
        region=region,
        region_exhausted=region_exhausted,
        n_candidates=n_candidates,
        beta=beta,
    )
