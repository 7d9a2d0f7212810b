"""Record of every evaluation made during one optimizer run."""

from dataclasses import dataclass, field
from enum import Enum

import numpy as np
import pandas as pd

from optimice.acquisition.relevant_region import RelevantRegion


class SelectionTag(str, Enum):
    INIT = 'INIT'
    UCB = 'UCB'
    PE = 'PE'


@dataclass(frozen=True, eq=False)
class Batch:
    """Points chosen in one iteration, in slot order.

    Attributes:
        points (np.ndarray): K x d points, the UCB point first.
        indices (np.ndarray): Their indices in the iteration's search set.
        tags (list[SelectionTag]): UCB for slot 0, PE for the rest.
        region (RelevantRegion): Relevant region of the iteration.
        region_exhausted (bool): Whether some PE slots fell back to ALM over the
            whole search set.
        n_candidates (int): Size of the PE candidate subset.
        beta (float): Exploration parameter of the iteration.
    """

    points: np.ndarray
    indices: np.ndarray
    tags: list[SelectionTag]
    region: RelevantRegion
    region_exhausted: bool
    n_candidates: int
    beta: float

    @property
    def size(self) -> int:
        return self.points.shape[0]

    @property
    def region_size(self) -> int:
        return len(self.region)


@dataclass(frozen=True, eq=False)
class Evaluation:
    iteration: int
    slot: int
    point: np.ndarray
    value: float
    tag: SelectionTag
    region_size: int = 0
    region_exhausted: bool = False


@dataclass
class TrialTrace:
    """Evaluations in the order they were appended.

    Iteration 0 holds the initial design; iteration t >= 1 holds the t-th batch.
    """

    dim: int
    evaluations: list[Evaluation] = field(default_factory=list)
    batches: list[Batch] = field(default_factory=list)

    def record_initial(self, points: np.ndarray, values: np.ndarray) -> None:
        for slot, (point, value) in enumerate(zip(points, values)):
            self.evaluations.append(
                Evaluation(0, slot, np.asarray(point), float(value), SelectionTag.INIT),
            )

    def record_batch(self, iteration: int, batch: Batch, values: np.ndarray) -> None:
        self.batches.append(batch)
        for slot, (point, value, tag) in enumerate(
            zip(batch.points, values, batch.tags),
        ):
            self.evaluations.append(
                Evaluation(
                    iteration,
                    slot,
                    np.asarray(point),
                    float(value),
                    tag,
                    batch.region_size,
                    batch.region_exhausted,
                ),
            )

    def __len__(self) -> int:
        return len(self.evaluations)

    @property
    def points(self) -> np.ndarray:
        return np.array([e.point for e in self.evaluations]).reshape(-1, self.dim)

    @property
    def values(self) -> np.ndarray:
        return np.array([e.value for e in self.evaluations])

    @property
    def best_so_far(self) -> np.ndarray:
        return np.maximum.accumulate(self.values)

    @property
    def best_value(self) -> float:
        return float(self.values.max())

    @property
    def best_point(self) -> np.ndarray:
        return self.points[int(np.argmax(self.values))]

    @property
    def region_sizes(self) -> list[int]:
        return [batch.region_size for batch in self.batches]

    def to_frame(self) -> pd.DataFrame:
        """One row per evaluation, coordinates spread over x_0..x_{d-1}."""
        frame = pd.DataFrame(
            {
                'iteration': [e.iteration for e in self.evaluations],
                'slot': [e.slot for e in self.evaluations],
                'eval_index': np.arange(1, len(self.evaluations) + 1),
            },
        )
        coordinates = pd.DataFrame(
            self.points,
            columns=[f'x_{i}' for i in range(self.dim)],
        )
        frame = pd.concat([frame, coordinates], axis=1)
        frame['y'] = self.values
        frame['best_so_far'] = self.best_so_far
        frame['selection_tag'] = [e.tag.value for e in self.evaluations]
        frame['region_size'] = [e.region_size for e in self.evaluations]
        frame['region_exhausted'] = [e.region_exhausted for e in self.evaluations]
        return frame
