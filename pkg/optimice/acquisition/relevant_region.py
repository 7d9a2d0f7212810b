"""Search points whose upper bound reaches the best lower bound."""

from dataclasses import dataclass

import numpy as np

from optimice.acquisition.functions import ConfidenceBounds, confidence_bounds
from optimice.emulator.gaussian_process import GpModel
from optimice.errors import ConfigurationError


@dataclass(frozen=True, eq=False)
class RelevantRegion:
    """Members of the region as indices into the search set.

    Attributes:
        member_indices (np.ndarray): Sorted indices i with upper(i) >= y_bullet.
        y_bullet (float): Largest lower confidence bound over the search set.
        bullet_index (int): Index attaining y_bullet, always a member.
    """

    member_indices: np.ndarray
    y_bullet: float
    bullet_index: int

    def __len__(self) -> int:
        return int(self.member_indices.size)

    def __contains__(self, index: int) -> bool:
        return bool(np.isin(index, self.member_indices))


def region_from_bounds(bounds: ConfidenceBounds) -> RelevantRegion:
    lower = np.atleast_1d(bounds.lower)
    upper = np.atleast_1d(bounds.upper)
    bullet_index = int(np.argmax(lower))
    y_bullet = float(lower[bullet_index])
    members = np.flatnonzero(upper >= y_bullet)
    return RelevantRegion(
        member_indices=members,
        y_bullet=y_bullet,
        bullet_index=bullet_index,
    )


def relevant_region(
    model: GpModel,
    search_points: np.ndarray,
    beta: float,
) -> RelevantRegion:
    search_points = np.atleast_2d(search_points)
    if search_points.shape[0] == 0:
        raise ConfigurationError('Search set is empty')
    bounds = confidence_bounds(model.predict_many(search_points), beta)
    return region_from_bounds(bounds)
