import numpy as np
import pytest

from optimice.emulator.gaussian_process import DesignSet, GpModel
from optimice.emulator.kernels import KernelConfig, KernelFamily
from optimice.sampling.designs import BoxDomain


@pytest.fixture
def peaked_model() -> GpModel:
    """1D model on [0, 1] with its largest observation at x = 0.5."""
    inputs = np.array([[0.0], [0.25], [0.5], [0.75], [1.0]])
    outputs = np.array([0.0, 0.8, 1.5, 0.7, -0.2])
    return GpModel.from_hyperparameters(
        DesignSet(inputs, outputs, BoxDomain.unit(1)),
        KernelConfig(KernelFamily.POWER_EXPONENTIAL, (0.2,)),
        process_variance=1.0,
    )


@pytest.fixture
def line() -> np.ndarray:
    return np.linspace(0, 1, 201)[:, None]
