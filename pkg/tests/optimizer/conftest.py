import numpy as np
import pytest

from optimice.emulator.gaussian_process import DesignSet, GpModel
from optimice.emulator.kernels import KernelConfig, KernelFamily
from optimice.sampling.designs import BoxDomain, lhs_maximin


def _bowl(x: np.ndarray) -> float:
    return -float(np.sum((np.asarray(x) - 0.3) ** 2))


@pytest.fixture
def bowl():
    """Concave objective on the unit square with its maximum 0 at (0.3, 0.3)."""
    return _bowl


@pytest.fixture
def unit_square() -> BoxDomain:
    return BoxDomain.unit(2)


@pytest.fixture
def trained_model(unit_square: BoxDomain) -> GpModel:
    inputs = lhs_maximin(8, 2, seed=5, restarts=10)
    outputs = np.array([_bowl(x) for x in inputs])
    return GpModel.from_hyperparameters(
        DesignSet(inputs, outputs, unit_square),
        KernelConfig(KernelFamily.POWER_EXPONENTIAL, (0.3, 0.3)),
        process_variance=0.05,
    )


@pytest.fixture
def search_points() -> np.ndarray:
    return np.random.default_rng(17).uniform(size=(60, 2))
