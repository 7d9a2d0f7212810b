"""Per-trial metrics: simple and cumulative regret, evaluations to a target."""

from dataclasses import dataclass

import numpy as np

from optimice.optimizer.trace import TrialTrace


def _values(trace: TrialTrace | np.ndarray) -> np.ndarray:
    if isinstance(trace, TrialTrace):
        return trace.values
    return np.asarray(trace, dtype=float).reshape(-1)


def simple_regret_curve(trace: TrialTrace | np.ndarray, f_star: float) -> np.ndarray:
    """f* minus the best value so far, clamped at zero, per evaluation."""
    best = np.maximum.accumulate(_values(trace))
    return np.maximum(f_star - best, 0.0)


def cumulative_regret_curve(
    trace: TrialTrace | np.ndarray,
    f_star: float,
) -> np.ndarray:
    """Running sum of f* - y over the evaluations, in evaluation order."""
    return np.cumsum(f_star - _values(trace))


def evals_to_target(trace: TrialTrace | np.ndarray, target: float) -> int | None:
    """1-based index of the first evaluation reaching `target`, None if never."""
    hits = np.flatnonzero(_values(trace) >= target)
    return int(hits[0]) + 1 if hits.size else None


@dataclass(frozen=True, eq=False)
class TrialSummary:
    """Outcome of one trial.

    Evaluation counts include the initial design.
    """

    function: str
    variant: str
    trial: int
    f_star: float
    values: np.ndarray
    best_so_far: np.ndarray
    evals_to_1pct: int | None
    evals_to_5pct: int | None

    @classmethod
    def from_trace(
        cls,
        trace: TrialTrace | np.ndarray,
        function: str,
        variant: str,
        trial: int,
        f_star: float,
        targets: tuple[float, float],
    ) -> 'TrialSummary':
        values = _values(trace)
        return cls(
            function=function,
            variant=variant,
            trial=trial,
            f_star=f_star,
            values=values,
            best_so_far=np.maximum.accumulate(values),
            evals_to_1pct=evals_to_target(values, targets[0]),
            evals_to_5pct=evals_to_target(values, targets[1]),
        )

    @property
    def budget(self) -> int:
        return int(self.best_so_far.size)

    @property
    def best_solution(self) -> float:
        return float(self.best_so_far[-1])

    @property
    def regret_curve(self) -> np.ndarray:
        return np.maximum(self.f_star - self.best_so_far, 0.0)

    @property
    def cumulative_regret(self) -> np.ndarray:
        return cumulative_regret_curve(self.values, self.f_star)
