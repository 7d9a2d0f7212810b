import numpy as np
import pytest

from optimice.emulator.gaussian_process import DesignSet, GpModel
from optimice.emulator.kernels import KernelConfig, KernelFamily
from optimice.sampling.designs import BoxDomain


def line_model(
    inputs: list[float],
    lengthscale: float = 0.15,
    process_variance: float = 1.0,
    outputs: np.ndarray | None = None,
    noise_ratio: float = 1e-8,
) -> GpModel:
    points = np.array(inputs)[:, None]
    if outputs is None:
        outputs = np.sin(6 * points[:, 0])
    return GpModel.from_hyperparameters(
        DesignSet(points, outputs, BoxDomain.unit(1)),
        KernelConfig(KernelFamily.POWER_EXPONENTIAL, (lengthscale,)),
        process_variance,
        noise_ratio,
    )


@pytest.fixture
def make_line_model():
    return line_model


@pytest.fixture
def gap_model() -> GpModel:
    """Training inputs 0.1, 0.3 and 0.9: the widest gap is (0.3, 0.9)."""
    return line_model([0.1, 0.3, 0.9])


@pytest.fixture
def grid() -> np.ndarray:
    return np.linspace(0, 1, 100)[:, None]
