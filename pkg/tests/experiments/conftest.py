import numpy as np
import pytest

from optimice.experiments.config import CampaignConfig
from optimice.experiments.metrics import TrialSummary
from optimice.optimizer.config import ExploreVariant, OptimizerConfig

TINY = {
    'iterations': 2,
    'batch_size': 2,
    'n_search': 100,
    'n_cand': 20,
    'n_starts': 2,
    'init_restarts': 5,
}


@pytest.fixture
def tiny_campaign(tmp_path) -> CampaignConfig:
    """Two variants, two trials of E1 at a budget of six evaluations."""
    return CampaignConfig(
        function_labels=('E1',),
        optimizer_configs={
            'mice': OptimizerConfig(**TINY),
            'alm': OptimizerConfig(explore_variant=ExploreVariant.ALM, **TINY),
        },
        n_trials=2,
        output_dir=tmp_path / 'out',
    )


@pytest.fixture
def synthetic_summaries() -> list[TrialSummary]:
    """Five trials of a maximization with f* = 10 and targets 9.9 / 9.5."""
    runs = [
        [1.0, 5.0, 9.6, 9.95, 9.0],
        [2.0, 9.9, 9.0, 9.0, 9.0],
        [0.0, 1.0, 2.0, 3.0, 4.0],
        [9.5, 9.5, 9.5, 9.5, 9.5],
        [3.0, 3.0, 10.0, 3.0, 3.0],
    ]
    return [
        TrialSummary.from_trace(np.array(values), 'E0', 'mice', i, 10.0, (9.9, 9.5))
        for i, values in enumerate(runs)
    ]
