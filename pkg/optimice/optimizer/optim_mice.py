"""Batch optimization loop.

A maximin Latin hypercube initial design is evaluated, then each iteration refits
the emulator once, draws a fresh search set, selects a batch and evaluates it.
Hyperparameters stay fixed while a batch is being selected.
"""

import logging
from collections.abc import Callable

import numpy as np
from joblib import Parallel, delayed

from optimice.emulator.gaussian_process import DesignSet, fit
from optimice.errors import ConfigurationError, ObjectiveError
from optimice.optimizer.batch import select_batch
from optimice.optimizer.config import OptimizerConfig
from optimice.optimizer.trace import TrialTrace
from optimice.sampling.designs import (
    BoxDomain,
    lhs_maximin,
    sample_search_set,
    scale_to_domain,
)

logger = logging.getLogger(__name__)

Objective = Callable[[np.ndarray], float]


class BatchOptimizer:
    """Maximize a black-box objective over a box with batches of evaluations.

    Attributes:
        objective (Callable): Maps a d-vector to a real value.
        domain (BoxDomain): Search box.
        config (OptimizerConfig): Settings resolved for the domain's dimension.
    """

    def __init__(
        self,
        objective: Objective,
        domain: BoxDomain,
        config: OptimizerConfig | None = None,
    ) -> None:
        self.objective = objective
        self.domain = domain
        self.config = (config or OptimizerConfig()).resolved(domain.dim)
        if self.config.iterations and self.config.n_init < 2:  # noqa: PLR2004
            raise ConfigurationError(
                f'At least 2 initial points are needed to fit the emulator, '
                f'got n_init={self.config.n_init}',
            )

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        """Evaluate rows of `points`, concurrently if eval_workers > 1.

        Results keep the row order whatever the completion order.

        Raises:
            ObjectiveError: If a value is not finite.
        """
        values = Parallel(n_jobs=self.config.eval_workers, prefer='threads')(
            delayed(self.objective)(point) for point in points
        )
        values = np.asarray(values, dtype=float)
        bad = np.flatnonzero(~np.isfinite(values))
        if bad.size:
            raise ObjectiveError(points[bad[0]], float(values[bad[0]]))
        return values

    def run(self) -> TrialTrace:
        config = self.config
        rng = np.random.default_rng(config.seed)
        trace = TrialTrace(dim=self.domain.dim)

        initial = scale_to_domain(
            lhs_maximin(config.n_init, self.domain.dim, rng, config.init_restarts),
            self.domain,
        )
        values = self.evaluate(initial)
        trace.record_initial(initial, values)
        design = DesignSet(initial, values, self.domain)

        for t in range(1, config.iterations + 1):
            model = fit(
                design,
                config.kernel_family,
                config.hyperparameter_bounds,
                power=config.power,
                smoothness=config.smoothness,
                n_starts=config.n_starts,
                rng=rng,
            )
            search_points = sample_search_set(config.n_search, self.domain, rng)
            batch = select_batch(model, search_points, config, t, rng)
            values = self.evaluate(batch.points)
            trace.record_batch(t, batch, values)
            design = design.appended(batch.points, values)
            logger.info(
                f'Iteration {t}/{config.iterations}: best {trace.best_value:.6g}, '
                f'relevant region {batch.region_size} points',
            )
        return trace


def run(
    objective: Objective,
    domain: BoxDomain,
    config: OptimizerConfig | None = None,
) -> TrialTrace:
    """Run the batch optimizer and return its trace."""
    return BatchOptimizer(objective, domain, config).run()
