import json
from dataclasses import replace
from unittest.mock import patch

import numpy as np
import pandas as pd
import pytest

from optimice.benchmark.registry import get_function
from optimice.errors import ObjectiveError
from optimice.experiments.campaign import (
    MANIFEST_FILE,
    REGRET_FILE,
    SUMMARY_FILE,
    TRIALS_FILE,
    read_summary,
    read_trials,
    run_campaign,
    run_trial,
    variant_ordering_check,
    write_atomic,
)
from optimice.experiments.config import CampaignConfig
from optimice.optimizer.config import ExploreVariant, OptimizerConfig
from optimice.optimizer.optim_mice import run as run_optimizer

TRIAL_COLUMNS = [
    'function',
    'variant',
    'trial',
    'iteration',
    'slot',
    'eval_index',
    'x_0',
    'x_1',
    'y',
    'best_so_far',
    'simple_regret',
    'cumulative_regret',
    'selection_tag',
    'region_size',
    'region_exhausted',
]


def test_smoke_campaign(tiny_campaign: CampaignConfig) -> None:
    result = run_campaign(tiny_campaign)
    assert result.ok
    assert result.trials.columns.tolist() == TRIAL_COLUMNS
    # 2 variants x 2 trials x (2 initial + 2 x 2 batch points)
    assert len(result.trials) == 24  # noqa: PLR2004
    assert result.summary['variant'].tolist() == ['mice', 'alm']
    assert (result.summary['n_trials'] == 2).all()  # noqa: PLR2004
    for name in (TRIALS_FILE, SUMMARY_FILE, REGRET_FILE, MANIFEST_FILE):
        assert (tiny_campaign.output_dir / name).exists()
    assert not list(tiny_campaign.output_dir.glob('.*.tmp'))


def test_single_trial_single_row(tiny_campaign: CampaignConfig) -> None:
    config = replace(
        tiny_campaign,
        optimizer_configs={'mice': tiny_campaign.optimizer_configs['mice']},
        n_trials=1,
    )
    result = run_campaign(config, write=False)
    assert len(result.summary) == 1
    assert not config.output_dir.exists()


def test_manifest(tiny_campaign: CampaignConfig) -> None:
    run_campaign(tiny_campaign)
    manifest = json.loads((tiny_campaign.output_dir / MANIFEST_FILE).read_text())
    assert manifest['config_sha256'] == tiny_campaign.digest
    assert manifest['seeds'] == [0, 1]
    assert manifest['failures'] == []
    assert manifest['package'] == 'optimice'
    assert [check['function'] for check in manifest['variant_ordering']] == ['E1']


def test_reruns_are_byte_identical(tiny_campaign: CampaignConfig) -> None:
    run_campaign(tiny_campaign)
    first = {
        name: (tiny_campaign.output_dir / name).read_bytes()
        for name in (TRIALS_FILE, SUMMARY_FILE, REGRET_FILE, MANIFEST_FILE)
    }
    run_campaign(replace(tiny_campaign, workers=2))
    for name in (TRIALS_FILE, SUMMARY_FILE, REGRET_FILE):
        assert (tiny_campaign.output_dir / name).read_bytes() == first[name]


def test_csv_round_trip(tiny_campaign: CampaignConfig) -> None:
    result = run_campaign(tiny_campaign)
    pd.testing.assert_frame_equal(
        read_trials(tiny_campaign.output_dir / TRIALS_FILE),
        result.trials,
        check_dtype=False,
    )
    pd.testing.assert_frame_equal(
        read_summary(tiny_campaign.output_dir / SUMMARY_FILE),
        result.summary,
        check_dtype=False,
    )


def test_trials_follow_trace(tiny_campaign: CampaignConfig) -> None:
    result = run_campaign(tiny_campaign, write=False)
    trials = result.trials
    one = trials[(trials['variant'] == 'mice') & (trials['trial'] == 1)]
    trace = run_optimizer(
        get_function('E1'),
        get_function('E1').domain,
        tiny_campaign.optimizer_configs['mice'].with_seed(1),
    )
    np.testing.assert_array_equal(one['y'], trace.values)
    np.testing.assert_array_equal(one[['x_0', 'x_1']], trace.points)


def test_cumulative_regret_column(tiny_campaign: CampaignConfig) -> None:
    trials = run_campaign(tiny_campaign, write=False).trials
    f_star = get_function('E1').global_opt
    for _, rows in trials.groupby(['variant', 'trial']):
        np.testing.assert_allclose(
            rows['cumulative_regret'], np.cumsum(f_star - rows['y'].to_numpy())
        )


def test_failed_trials_are_recorded(tiny_campaign: CampaignConfig) -> None:
    def fail_second_seed(objective, domain, config):
        if config.seed == 1:
            raise ObjectiveError(np.zeros(2), float('nan'))
        return run_optimizer(objective, domain, config)

    with patch('optimice.experiments.campaign.run', side_effect=fail_second_seed):
        result = run_campaign(tiny_campaign)
    assert not result.ok
    assert [(f['variant'], f['seed']) for f in result.failures] == [
        ('mice', 1),
        ('alm', 1),
    ]
    assert 'ObjectiveError' in result.failures[0]['error']
    assert (result.summary['n_trials'] == 1).all()
    manifest = json.loads((tiny_campaign.output_dir / MANIFEST_FILE).read_text())
    assert len(manifest['failures']) == 2  # noqa: PLR2004


def test_every_trial_failed(tiny_campaign: CampaignConfig) -> None:
    with patch(
        'optimice.experiments.campaign.run',
        side_effect=ObjectiveError(np.zeros(2), float('inf')),
    ):
        result = run_campaign(tiny_campaign)
    assert len(result.failures) == 4  # noqa: PLR2004
    assert result.summary.empty
    assert result.trials.empty
    assert (tiny_campaign.output_dir / SUMMARY_FILE).exists()


def test_run_trial_outcome() -> None:
    config = OptimizerConfig(n_init=3, iterations=0)
    outcome = run_trial(get_function('E4'), config.resolved(2), seed=5, trial=2)
    assert outcome.ok
    assert (outcome.function, outcome.trial, outcome.seed) == ('E4', 2, 5)
    assert len(outcome.trace) == 3  # noqa: PLR2004


@pytest.mark.parametrize(
    ('mice', 'alm', 'passed'),
    [
        (30.0, 40.0, True),
        (43.0, 40.0, True),
        (45.0, 40.0, False),
        (float('nan'), 40.0, False),
        (30.0, float('nan'), True),
        (float('nan'), float('nan'), None),
    ],
)
def test_variant_ordering_check(mice: float, alm: float, passed: bool | None) -> None:
    summary = pd.DataFrame(
        {
            'function': ['E1', 'E1'],
            'variant': ['m', 'a'],
            'mean_evals_5pct': [mice, alm],
        },
    )
    configs = {
        'm': OptimizerConfig(),
        'a': OptimizerConfig(explore_variant=ExploreVariant.ALM),
    }
    (check,) = variant_ordering_check(summary, configs)
    assert check['passed'] is passed
    assert variant_ordering_check(summary, {'m': OptimizerConfig()}) == []


def test_write_atomic(tmp_path) -> None:
    path = tmp_path / 'nested' / 'file.txt'
    write_atomic(path, 'first\n')
    write_atomic(path, 'second\n')
    assert path.read_text() == 'second\n'
    assert [p.name for p in path.parent.iterdir()] == ['file.txt']
