import logging

import numpy as np

from optimice.acquisition.functions import confidence_bounds
from optimice.acquisition.relevant_region import region_from_bounds
from optimice.design_criteria.criteria import mice_scores
from optimice.emulator.gaussian_process import DesignSet, GpModel
from optimice.emulator.kernels import KernelConfig, KernelFamily
from optimice.optimizer.batch import fresh_mask, select_batch
from optimice.optimizer.config import ExploreVariant, OptimizerConfig
from optimice.optimizer.trace import SelectionTag
from optimice.sampling.designs import BoxDomain

BRANIN_BOX = BoxDomain((-5.0, 0.0), (10.0, 15.0))


def _config(**overrides) -> OptimizerConfig:
    settings = {'n_search': 60, 'n_cand': 60} | overrides
    return OptimizerConfig(**settings).resolved(2)


def test_single_point_batch_is_ucb(
    trained_model: GpModel, search_points: np.ndarray
) -> None:
    config = _config(batch_size=1)
    batch = select_batch(trained_model, search_points, config, t=1, rng=0)
    assert batch.size == 1
    assert batch.tags == [SelectionTag.UCB]
    assert batch.n_candidates == 0
    assert not batch.region_exhausted


def test_ucb_slot_maximizes_upper_bound(
    trained_model: GpModel, search_points: np.ndarray
) -> None:
    config = _config(batch_size=3)
    batch = select_batch(trained_model, search_points, config, t=2, rng=0)
    beta = config.beta.at(2, len(search_points))
    bounds = confidence_bounds(trained_model.predict_many(search_points), beta)
    assert batch.indices[0] == int(np.argmax(bounds.upper))
    assert batch.beta == beta


def test_second_point_matches_exhaustive_mice(
    trained_model: GpModel, search_points: np.ndarray
) -> None:
    config = _config(batch_size=2)
    batch = select_batch(trained_model, search_points, config, t=1, rng=4)
    ucb = batch.indices[0]
    members = np.array([i for i in batch.region.member_indices if i != ucb])
    scores = mice_scores(
        trained_model,
        search_points[[ucb]],
        search_points[members],
        nugget=config.nugget,
    )
    assert batch.indices[1] == members[int(np.argmax(scores))]
    assert batch.tags == [SelectionTag.UCB, SelectionTag.PE]


def test_exploration_points_lie_in_region(
    trained_model: GpModel, search_points: np.ndarray
) -> None:
    for variant in ExploreVariant:
        batch = select_batch(
            trained_model,
            search_points,
            _config(batch_size=4, explore_variant=variant),
            t=1,
            rng=1,
        )
        if not batch.region_exhausted:
            assert all(i in batch.region for i in batch.indices[1:])
        assert len(set(batch.indices)) == batch.size


def test_candidate_subset_size(
    trained_model: GpModel, search_points: np.ndarray
) -> None:
    batch = select_batch(
        trained_model, search_points, _config(batch_size=3, n_cand=2), t=1, rng=0
    )
    assert batch.n_candidates <= 2  # noqa: PLR2004
    assert batch.size == 3  # noqa: PLR2004


def test_fallback_when_nothing_is_fresh(trained_model: GpModel, caplog) -> None:
    search_points = trained_model.training_inputs.copy()
    assert not np.any(fresh_mask(trained_model, search_points))
    with caplog.at_level(logging.WARNING, logger='optimice.optimizer.batch'):
        config = _config(batch_size=3, n_search=8, n_cand=8)
        batch = select_batch(trained_model, search_points, config, t=1, rng=0)
    assert batch.region_exhausted
    assert batch.n_candidates == 0
    assert batch.size == 3  # noqa: PLR2004
    assert len(set(batch.indices)) == 3  # noqa: PLR2004
    assert 'falling back to ALM' in caplog.text


def test_region_matches_bounds(
    trained_model: GpModel, search_points: np.ndarray
) -> None:
    config = _config(batch_size=2)
    batch = select_batch(trained_model, search_points, config, t=1, rng=0)
    bounds = confidence_bounds(
        trained_model.predict_many(search_points), config.beta.at(1, len(search_points))
    )
    np.testing.assert_array_equal(
        batch.region.member_indices, region_from_bounds(bounds).member_indices
    )


def _box_model(inputs: np.ndarray) -> GpModel:
    outputs = np.sin(inputs[:, 0]) + np.cos(inputs[:, 1] / 3)
    return GpModel.from_hyperparameters(
        DesignSet(inputs, outputs, BRANIN_BOX),
        KernelConfig(KernelFamily.POWER_EXPONENTIAL, (0.2, 0.2)),
        process_variance=1.0,
    )


def test_exact_copies_are_never_fresh() -> None:
    rng = np.random.default_rng(8)
    for _ in range(50):
        inputs = BRANIN_BOX.lb + rng.uniform(size=(12, 2)) * BRANIN_BOX.width
        model = _box_model(inputs)
        assert not np.any(fresh_mask(model, inputs.copy()))
        shifted = inputs + 1e-6 * BRANIN_BOX.width
        assert np.all(fresh_mask(model, shifted))


def test_batch_skips_copies_of_evaluated_inputs() -> None:
    rng = np.random.default_rng(9)
    inputs = BRANIN_BOX.lb + rng.uniform(size=(12, 2)) * BRANIN_BOX.width
    model = _box_model(inputs)
    new = BRANIN_BOX.lb + rng.uniform(size=(30, 2)) * BRANIN_BOX.width
    search_points = np.vstack([inputs, new])
    config = _config(batch_size=4, n_search=42, n_cand=42)
    batch = select_batch(model, search_points, config, t=1, rng=0)
    assert np.all(batch.indices >= len(inputs))
