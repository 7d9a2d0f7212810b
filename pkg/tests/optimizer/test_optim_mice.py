import time

import numpy as np
import pytest

from optimice.errors import ConfigurationError, ObjectiveError
from optimice.optimizer.config import ExploreVariant, OptimizerConfig
from optimice.optimizer.optim_mice import BatchOptimizer, run
from optimice.optimizer.trace import SelectionTag
from optimice.sampling.designs import BoxDomain

SMALL = {'n_search': 200, 'n_cand': 40, 'n_starts': 2, 'init_restarts': 10}


def test_initial_design_only(bowl, unit_square: BoxDomain) -> None:
    trace = run(bowl, unit_square, OptimizerConfig(n_init=4, iterations=0))
    assert len(trace) == 4  # noqa: PLR2004
    assert {e.tag for e in trace.evaluations} == {SelectionTag.INIT}
    assert trace.batches == []
    assert unit_square.contains(trace.points).all()


@pytest.mark.parametrize(
    ('n_init', 'iterations', 'batch_size'),
    [
        (2, 2, 3),
        (3, 1, 1),
        (4, 3, 2),
    ],
)
def test_trace_length(
    bowl, unit_square: BoxDomain, n_init: int, iterations: int, batch_size: int
) -> None:
    config = OptimizerConfig(
        n_init=n_init, iterations=iterations, batch_size=batch_size, **SMALL
    )
    trace = run(bowl, unit_square, config)
    assert len(trace) == n_init + iterations * batch_size
    assert len(trace.batches) == iterations
    frame = trace.to_frame()
    assert frame['eval_index'].tolist() == list(range(1, len(trace) + 1))
    assert (frame['best_so_far'].diff().dropna() >= 0).all()
    batches = frame[frame['iteration'] > 0]
    ucb = batches['slot'] == 0
    assert (batches.loc[ucb, 'selection_tag'] == 'UCB').all()
    assert (batches.loc[~ucb, 'selection_tag'] == 'PE').all()


def test_same_seed_same_trace(bowl, unit_square: BoxDomain) -> None:
    config = OptimizerConfig(iterations=2, batch_size=3, seed=21, **SMALL)
    first, second = (run(bowl, unit_square, config) for _ in range(2))
    np.testing.assert_array_equal(first.points, second.points)
    np.testing.assert_array_equal(first.values, second.values)


def test_seed_changes_trace(bowl, unit_square: BoxDomain) -> None:
    traces = [
        run(bowl, unit_square, OptimizerConfig(iterations=1, seed=s, **SMALL))
        for s in (1, 2)
    ]
    assert not np.array_equal(traces[0].points, traces[1].points)


def test_constant_objective(unit_square: BoxDomain) -> None:
    config = OptimizerConfig(iterations=2, batch_size=3, **SMALL)
    trace = run(lambda x: 1.0, unit_square, config)
    assert len(trace) == 8  # noqa: PLR2004
    np.testing.assert_array_equal(trace.values, 1.0)


def test_variants_agree_without_exploration_slots(
    bowl, unit_square: BoxDomain
) -> None:
    traces = [
        run(
            bowl,
            unit_square,
            OptimizerConfig(
                iterations=3,
                batch_size=1,
                explore_variant=variant,
                n_search=200,
                n_starts=2,
                init_restarts=10,
            ),
        )
        for variant in ExploreVariant
    ]
    np.testing.assert_array_equal(traces[0].points, traces[1].points)


def test_points_stay_in_domain(bowl) -> None:
    domain = BoxDomain((-5.0, 0.0), (10.0, 15.0))
    trace = run(bowl, domain, OptimizerConfig(iterations=2, **SMALL))
    assert domain.contains(trace.points).all()


def test_improves_on_initial_design(bowl, unit_square: BoxDomain) -> None:
    trace = run(bowl, unit_square, OptimizerConfig(iterations=4, seed=3, **SMALL))
    assert trace.best_value >= max(trace.values[:2])
    assert trace.best_value > -0.05  # noqa: PLR2004


def test_non_finite_objective(unit_square: BoxDomain) -> None:
    with pytest.raises(ObjectiveError, match='.*nan.*'):
        run(lambda x: float('nan'), unit_square, OptimizerConfig(iterations=0))


def test_needs_two_initial_points(bowl, unit_square: BoxDomain) -> None:
    with pytest.raises(ConfigurationError, match='.*n_init=1.*'):
        BatchOptimizer(bowl, unit_square, OptimizerConfig(n_init=1, iterations=2))


def test_concurrent_evaluations_keep_order(unit_square: BoxDomain) -> None:
    def slow_first_coordinate(x: np.ndarray) -> float:
        time.sleep(0.02 * (1 - x[0]))
        return float(x[0])

    optimizer = BatchOptimizer(
        slow_first_coordinate, unit_square, OptimizerConfig(eval_workers=4)
    )
    points = np.column_stack([np.linspace(0, 1, 8), np.zeros(8)])
    np.testing.assert_array_equal(optimizer.evaluate(points), points[:, 0])
