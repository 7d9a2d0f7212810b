import numpy as np
import pytest

from optimice.acquisition.functions import confidence_bounds
from optimice.acquisition.relevant_region import region_from_bounds, relevant_region
from optimice.emulator.gaussian_process import GpModel, Prediction
from optimice.errors import ConfigurationError


def test_region_membership() -> None:
    prediction = Prediction(
        mean=np.array([0.0, 1.0, 3.0, 2.5]), variance=np.array([1.0, 0.25, 0.0, 0.09])
    )
    region = region_from_bounds(confidence_bounds(prediction, 4.0))
    # lower bounds -2, 0, 3, 1.9 and upper bounds 2, 2, 3, 3.1
    assert region.y_bullet == 3.0  # noqa: PLR2004
    assert region.bullet_index == 2  # noqa: PLR2004
    np.testing.assert_array_equal(region.member_indices, [2, 3])
    assert 3 in region
    assert 0 not in region


def test_bullet_always_member(peaked_model: GpModel, line: np.ndarray) -> None:
    for beta in (0.0, 1.0, 25.0):
        region = relevant_region(peaked_model, line, beta)
        assert region.bullet_index in region
        assert len(region) >= 1


def test_region_grows_with_beta(peaked_model: GpModel, line: np.ndarray) -> None:
    regions = [relevant_region(peaked_model, line, beta) for beta in (0.5, 4.0, 25.0)]
    for smaller, larger in zip(regions, regions[1:]):
        assert set(smaller.member_indices) <= set(larger.member_indices)


def test_region_around_peak(peaked_model: GpModel, line: np.ndarray) -> None:
    region = relevant_region(peaked_model, line, 1.0)
    members = line[region.member_indices, 0]
    assert members.min() > 0.1  # noqa: PLR2004
    assert members.max() < 0.9  # noqa: PLR2004


def test_region_empty_search_set(peaked_model: GpModel) -> None:
    with pytest.raises(ConfigurationError, match='.*empty.*'):
        relevant_region(peaked_model, np.empty((0, 1)), 1.0)
