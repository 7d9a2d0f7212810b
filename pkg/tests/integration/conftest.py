import pytest

from optimice.experiments.campaign import CampaignResult, run_campaign
from optimice.experiments.config import CampaignConfig
from optimice.optimizer.config import ExploreVariant, OptimizerConfig


def _campaign(
    labels: tuple[str, ...], n_trials: int, output_dir, **settings
) -> CampaignConfig:
    return CampaignConfig(
        function_labels=labels,
        optimizer_configs={
            'mice': OptimizerConfig(**settings),
            'alm': OptimizerConfig(explore_variant=ExploreVariant.ALM, **settings),
        },
        n_trials=n_trials,
        output_dir=output_dir,
        workers=4,
    )


@pytest.fixture
def run_variants(tmp_path):
    """Run MICE and ALM on the given functions at the default settings."""

    def run(labels: tuple[str, ...], n_trials: int, **settings) -> CampaignResult:
        return run_campaign(_campaign(labels, n_trials, tmp_path, **settings))

    return run
