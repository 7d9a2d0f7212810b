"""Multi-trial campaigns and their output files.

A campaign runs n_trials of every (function, optimizer variant) pair, reduces the
traces into summaries and writes, from a single writer and atomically:

- trials.csv: one row per evaluation
- summary.csv: one row per (function, variant)
- regret.csv: mean simple and cumulative regret curves, best-trial regret curve
- manifest.json: config digest, seeds, package version, failures and the
  MICE-versus-ALM ordering check
"""

import json
import logging
import math
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from optimice import __version__
from optimice.benchmark.registry import TestFunction
from optimice.benchmark.scaling import ScaledFunction
from optimice.errors import OptimiceError
from optimice.experiments.config import CampaignConfig
from optimice.experiments.metrics import TrialSummary, cumulative_regret_curve
from optimice.experiments.schemas import regret_schema, summary_schema, trials_schema
from optimice.experiments.summary import mean_regret_curves, summarize_campaign
from optimice.optimizer.config import ExploreVariant, OptimizerConfig
from optimice.optimizer.optim_mice import run
from optimice.optimizer.trace import TrialTrace

logger = logging.getLogger(__name__)

Problem = TestFunction | ScaledFunction

TRIALS_FILE = 'trials.csv'
SUMMARY_FILE = 'summary.csv'
REGRET_FILE = 'regret.csv'
MANIFEST_FILE = 'manifest.json'
# MICE may need this much more than ALM before the ordering check fails.
ORDERING_TOLERANCE = 0.1


@dataclass(frozen=True, eq=False)
class TrialOutcome:
    """Trace of a finished trial, or the error that aborted it."""

    function: str
    variant: str
    trial: int
    seed: int
    trace: TrialTrace | None = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.trace is not None


def run_trial(
    problem: Problem,
    config: OptimizerConfig,
    seed: int,
    variant: str = 'mice',
    trial: int = 0,
) -> TrialOutcome:
    """Run one seeded trial; package errors are recorded instead of raised."""
    try:
        trace = run(problem, problem.domain, config.with_seed(seed))
    except OptimiceError as error:
        logger.warning(f'{problem.label}/{variant} trial {trial} aborted: {error}')
        return TrialOutcome(
            problem.label,
            variant,
            trial,
            seed,
            error=f'{type(error).__name__}: {error}',
        )
    logger.info(
        f'{problem.label}/{variant} trial {trial} done, best {trace.best_value:.6g}',
    )
    return TrialOutcome(problem.label, variant, trial, seed, trace=trace)


def trial_frame(outcome: TrialOutcome, f_star: float) -> pd.DataFrame:
    """Rows of trials.csv for one successful trial."""
    frame = outcome.trace.to_frame()
    frame.insert(0, 'trial', outcome.trial)
    frame.insert(0, 'variant', outcome.variant)
    frame.insert(0, 'function', outcome.function)
    frame.insert(
        frame.columns.get_loc('best_so_far') + 1,
        'simple_regret',
        np.maximum(f_star - frame['best_so_far'], 0.0),
    )
    frame.insert(
        frame.columns.get_loc('simple_regret') + 1,
        'cumulative_regret',
        cumulative_regret_curve(frame['y'].to_numpy(), f_star),
    )
    return frame


def _none_if_nan(value: float) -> float | None:
    return None if value is None or math.isnan(value) else float(value)


def variant_ordering_check(
    summary: pd.DataFrame,
    optimizer_configs: dict[str, OptimizerConfig],
    tolerance: float = ORDERING_TOLERANCE,
) -> list[dict[str, Any]]:
    """Compare MICE and ALM mean evaluations to the 5% target per function.

    The first variant of each kind is compared. A row passes when MICE needs at
    most (1 + tolerance) times the ALM mean; `passed` is None when neither variant
    ever reached the target. The result is informational only.
    """
    kinds = {
        kind: next(
            (n for n, c in optimizer_configs.items() if c.explore_variant is kind),
            None,
        )
        for kind in ExploreVariant
    }
    mice, alm = kinds[ExploreVariant.MICE], kinds[ExploreVariant.ALM]
    if mice is None or alm is None:
        return []
    checks = []
    for function, rows in summary.groupby('function', sort=False):
        by_variant = rows.set_index('variant')['mean_evals_5pct']
        if mice not in by_variant or alm not in by_variant:
            continue
        mice_evals = _none_if_nan(by_variant[mice])
        alm_evals = _none_if_nan(by_variant[alm])
        if mice_evals is None and alm_evals is None:
            passed = None
        elif mice_evals is None:
            passed = False
        elif alm_evals is None:
            passed = True
        else:
            passed = mice_evals <= alm_evals * (1 + tolerance)
        checks.append(
            {
                'function': function,
                'mice_variant': mice,
                'alm_variant': alm,
                'mice_mean_evals_5pct': mice_evals,
                'alm_mean_evals_5pct': alm_evals,
                'passed': passed,
            },
        )
    return checks


@dataclass(eq=False)
class CampaignResult:
    trials: pd.DataFrame
    summary: pd.DataFrame
    regret: pd.DataFrame
    summaries: list[TrialSummary]
    failures: list[dict[str, Any]] = field(default_factory=list)
    manifest: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures


def write_atomic(path: Path, text: str) -> None:
    """Write through a temporary sibling file and rename it over `path`."""
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(f'.{path.name}.tmp')
    tmp.write_text(text, encoding='utf-8')
    os.replace(tmp, path)


def read_trials(path: str | Path) -> pd.DataFrame:
    return trials_schema.validate(pd.read_csv(path, float_precision='round_trip'))


def read_summary(path: str | Path) -> pd.DataFrame:
    return summary_schema.validate(pd.read_csv(path, float_precision='round_trip'))


def _empty(schema_columns: list[str]) -> pd.DataFrame:
    return pd.DataFrame(columns=schema_columns)


def run_campaign(config: CampaignConfig, write: bool = True) -> CampaignResult:
    """Run every trial of the campaign and reduce the results.

    Trials run on `config.workers` threads; results are reduced in job order so
    the outputs do not depend on completion order.

    Args:
        config (CampaignConfig): Campaign to run.
        write (bool): Whether to write the output files to config.output_dir.

    Returns:
        CampaignResult: Frames, summaries, failures and manifest.
    """
    problems = config.problems()
    jobs = [
        (problem, name, optimizer.resolved(problem.dim), trial, seed)
        for problem in problems
        for name, optimizer in config.optimizer_configs.items()
        for trial, seed in enumerate(config.seeds())
    ]
    logger.info(f'Running {len(jobs)} trials on {config.workers} worker(s)')
    outcomes = Parallel(n_jobs=config.workers, prefer='threads')(
        delayed(run_trial)(problem, optimizer, seed, name, trial)
        for problem, name, optimizer, trial, seed in jobs
    )

    by_label = {problem.label: problem for problem in problems}
    frames, summaries, failures = [], [], []
    for outcome in outcomes:
        if not outcome.ok:
            failures.append(
                {
                    'function': outcome.function,
                    'variant': outcome.variant,
                    'trial': outcome.trial,
                    'seed': outcome.seed,
                    'error': outcome.error,
                },
            )
            continue
        problem = by_label[outcome.function]
        frames.append(trial_frame(outcome, problem.global_opt))
        summaries.append(
            TrialSummary.from_trace(
                outcome.trace,
                outcome.function,
                outcome.variant,
                outcome.trial,
                problem.global_opt,
                problem.targets(),
            ),
        )

    if summaries:
        trials = trials_schema.validate(pd.concat(frames, ignore_index=True))
        summary = summarize_campaign(summaries)
        regret = mean_regret_curves(summaries)
    else:
        trials = _empty([c for c in trials_schema.columns if not c.startswith('^')])
        summary = _empty(list(summary_schema.columns))
        regret = _empty(list(regret_schema.columns))

    manifest = {
        'package': 'optimice',
        'version': __version__,
        'config_sha256': config.digest,
        'config': config.to_dict(),
        'seeds': config.seeds(),
        'failures': failures,
        'variant_ordering': variant_ordering_check(summary, config.optimizer_configs)
        if summaries
        else [],
    }
    result = CampaignResult(trials, summary, regret, summaries, failures, manifest)
    if write:
        write_outputs(result, config.output_dir)
    return result


def write_outputs(result: CampaignResult, output_dir: Path) -> None:
    output_dir = Path(output_dir)
    write_atomic(output_dir / TRIALS_FILE, result.trials.to_csv(index=False))
    write_atomic(output_dir / SUMMARY_FILE, result.summary.to_csv(index=False))
    write_atomic(output_dir / REGRET_FILE, result.regret.to_csv(index=False))
    write_atomic(
        output_dir / MANIFEST_FILE,
        json.dumps(result.manifest, indent=2, sort_keys=True) + '\n',
    )
    logger.info(f'Wrote campaign outputs to {output_dir}')
