import numpy as np
import pytest

from optimice.emulator.gaussian_process import DesignSet, GpModel
from optimice.emulator.kernels import KernelConfig, KernelFamily, correlation_matrix
from optimice.sampling.designs import BoxDomain


@pytest.fixture
def unit_square() -> BoxDomain:
    return BoxDomain.unit(2)


@pytest.fixture
def small_design(unit_square: BoxDomain) -> DesignSet:
    """Five well-separated 2D points with smooth outputs."""
    rng = np.random.default_rng(3)
    inputs = rng.uniform(size=(5, 2))
    outputs = np.sin(3 * inputs[:, 0]) + inputs[:, 1] ** 2
    return DesignSet(inputs, outputs, unit_square)


@pytest.fixture
def frozen_model(small_design: DesignSet) -> GpModel:
    kernel = KernelConfig(KernelFamily.POWER_EXPONENTIAL, (0.15, 0.15))
    return GpModel.from_hyperparameters(small_design, kernel, process_variance=2.0)


def _dense_oracle(model: GpModel, points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Predictive mean and variance through an explicit matrix inverse."""
    train = model.design.unit_inputs
    unit = model.design.to_unit(points)
    inverse = np.linalg.inv(
        correlation_matrix(train, train, model.kernel)
        + model.noise_ratio * np.eye(train.shape[0]),
    )
    cross = correlation_matrix(train, unit, model.kernel)
    y_std = (model.training_outputs - model.y_mean) / model.y_scale
    mean = model.y_mean + model.y_scale * cross.T @ inverse @ y_std
    variance = model.process_variance * (
        1 - np.einsum('ij,ik,kj->j', cross, inverse, cross)
    )
    return mean, variance


@pytest.fixture
def dense_oracle():
    return _dense_oracle
