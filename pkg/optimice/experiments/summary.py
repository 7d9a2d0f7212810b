"""Reduction of trial summaries into per-(function, variant) rows."""

import numpy as np
import pandas as pd

from optimice.experiments.metrics import TrialSummary
from optimice.experiments.schemas import regret_schema, summary_schema


def _groups(summaries: list[TrialSummary]) -> dict[tuple[str, str], list[TrialSummary]]:
    groups: dict[tuple[str, str], list[TrialSummary]] = {}
    for summary in summaries:
        groups.setdefault((summary.function, summary.variant), []).append(summary)
    return groups


def _mean_evals(counts: list[int | None]) -> float:
    reached = [c for c in counts if c is not None]
    return float(np.mean(reached)) if reached else float('nan')


def summarize_campaign(summaries: list[TrialSummary]) -> pd.DataFrame:
    """One row per (function, variant), in first-seen order.

    Mean evaluations average over successful trials only and are NaN when no trial
    succeeded. The standard deviation of best solutions is the sample one, 0 for a
    single trial.

    Raises:
        ValueError: If no summary is given.
    """
    if not summaries:
        raise ValueError('Cannot summarize an empty campaign')
    rows = []
    for (function, variant), group in _groups(summaries).items():
        best = np.array([s.best_solution for s in group])
        rows.append(
            {
                'function': function,
                'variant': variant,
                'n_trials': len(group),
                'budget': max(s.budget for s in group),
                'success_1pct': sum(s.evals_to_1pct is not None for s in group),
                'success_5pct': sum(s.evals_to_5pct is not None for s in group),
                'mean_evals_1pct': _mean_evals([s.evals_to_1pct for s in group]),
                'mean_evals_5pct': _mean_evals([s.evals_to_5pct for s in group]),
                'best': float(best.max()),
                'mean_best': float(best.mean()),
                'sd_best': float(best.std(ddof=1)) if best.size > 1 else 0.0,
            },
        )
    return summary_schema.validate(pd.DataFrame(rows))


def mean_regret_curves(summaries: list[TrialSummary]) -> pd.DataFrame:
    """Long-format mean regret per evaluation for every (function, variant).

    `mean_simple_regret` averages the per-trial regret curves; `regret_of_mean` is
    the regret of the mean best-so-far value; `mean_cumulative_regret` averages the
    running sums of f* - y. `best_trial_simple_regret` follows the trial with the
    best final solution (first one on ties). Curves are cut to the shortest trial.
    """
    frames = []
    for (function, variant), group in _groups(summaries).items():
        length = min(s.budget for s in group)
        best = np.vstack([s.best_so_far[:length] for s in group])
        regret = np.vstack([s.regret_curve[:length] for s in group])
        cumulative = np.vstack([s.cumulative_regret[:length] for s in group])
        best_trial = int(np.argmax([s.best_solution for s in group]))
        f_star = group[0].f_star
        frames.append(
            pd.DataFrame(
                {
                    'function': function,
                    'variant': variant,
                    'eval_index': np.arange(1, length + 1),
                    'mean_simple_regret': regret.mean(axis=0),
                    'regret_of_mean': np.maximum(f_star - best.mean(axis=0), 0.0),
                    'mean_cumulative_regret': cumulative.mean(axis=0),
                    'best_trial_simple_regret': regret[best_trial],
                },
            ),
        )
    return regret_schema.validate(pd.concat(frames, ignore_index=True))


def format_evaluations(mean: float, successes: int, budget: int) -> str:
    """'39(50)' for a mean over 50 successes, '100+(0)' when none succeeded."""
    if successes == 0 or np.isnan(mean):
        return f'{budget}+(0)'
    return f'{round(mean)}({successes})'


def evaluations_table(summary: pd.DataFrame) -> pd.DataFrame:
    """Functions by variant, cells formatted as mean evaluations(successes)."""
    frame = summary.assign(
        evals_1pct=[
            format_evaluations(m, s, b)
            for m, s, b in zip(
                summary['mean_evals_1pct'], summary['success_1pct'], summary['budget']
            )
        ],
        evals_5pct=[
            format_evaluations(m, s, b)
            for m, s, b in zip(
                summary['mean_evals_5pct'], summary['success_5pct'], summary['budget']
            )
        ],
    )
    return frame.pivot(
        index='function',
        columns='variant',
        values=['evals_1pct', 'evals_5pct'],
    )
