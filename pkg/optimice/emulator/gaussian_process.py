"""Gaussian-process regression on a box domain.

Inputs are mapped to the unit cube through the design's domain and outputs are
standardized before fitting. The covariance is process_variance * (C + eta * I)
where C is the kernel correlation matrix and eta the relative jitter, so the noise
variance is eta * process_variance. Every solve goes through the stored Cholesky
factor.
"""

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import cho_solve, solve_triangular
from sklearn.preprocessing import StandardScaler

from optimice.emulator.kernels import KernelConfig, KernelFamily, correlation_matrix
from optimice.emulator.likelihood import HyperparameterBounds, maximize_likelihood
from optimice.emulator.linalg import JITTER_START, factorize
from optimice.errors import ConfigurationError
from optimice.sampling.designs import BoxDomain

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class DesignSet:
    """Training inputs (n x d, domain coordinates) and their outputs."""

    inputs: np.ndarray
    outputs: np.ndarray
    domain: BoxDomain | None = None

    def __post_init__(self) -> None:
        inputs = np.atleast_2d(np.asarray(self.inputs, dtype=float))
        outputs = np.asarray(self.outputs, dtype=float).reshape(-1)
        if inputs.shape[0] != outputs.shape[0]:
            raise ConfigurationError(
                f'{inputs.shape[0]} inputs but {outputs.shape[0]} outputs',
            )
        if self.domain is not None and self.domain.dim != inputs.shape[1]:
            raise ConfigurationError(
                f'Inputs of dimension {inputs.shape[1]} on a '
                f'{self.domain.dim}-dimensional domain',
            )
        object.__setattr__(self, 'inputs', inputs)
        object.__setattr__(self, 'outputs', outputs)

    @property
    def size(self) -> int:
        return self.inputs.shape[0]

    @property
    def dim(self) -> int:
        return self.inputs.shape[1]

    def to_unit(self, points: np.ndarray) -> np.ndarray:
        points = np.atleast_2d(np.asarray(points, dtype=float))
        return points if self.domain is None else self.domain.to_unit(points)

    @property
    def unit_inputs(self) -> np.ndarray:
        return self.to_unit(self.inputs)

    def appended(self, points: np.ndarray, outputs: np.ndarray) -> 'DesignSet':
        return DesignSet(
            np.vstack([self.inputs, np.atleast_2d(points)]),
            np.concatenate([self.outputs, np.asarray(outputs, dtype=float).ravel()]),
            self.domain,
        )


@dataclass(frozen=True)
class Prediction:
    """Predictive mean and variance; scalars for one point, arrays for many."""

    mean: float | np.ndarray
    variance: float | np.ndarray

    @property
    def sd(self) -> float | np.ndarray:
        return np.sqrt(self.variance)


@dataclass(frozen=True, eq=False)
class GpModel:
    """Fitted emulator. Immutable, safe for concurrent prediction.

    Attributes:
        design (DesignSet): Training data.
        kernel (KernelConfig): Kernel with lengthscales in unit-cube coordinates.
        process_variance (float): Prior variance in output units.
        noise_ratio (float): Jitter relative to the process variance.
        y_mean (float): Output mean removed before fitting.
        y_scale (float): Output scale removed before fitting.
        cov_factor (np.ndarray): Lower Cholesky factor of C + noise_ratio * I.
        alpha (np.ndarray): (C + noise_ratio * I)^-1 applied to standardized outputs.
    """

    design: DesignSet
    kernel: KernelConfig
    process_variance: float
    noise_ratio: float
    y_mean: float
    y_scale: float
    cov_factor: np.ndarray = field(repr=False)
    alpha: np.ndarray = field(repr=False)

    @classmethod
    def from_hyperparameters(
        cls,
        design: DesignSet,
        kernel: KernelConfig,
        process_variance: float,
        noise_ratio: float = JITTER_START,
    ) -> 'GpModel':
        """Condition a GP with fixed hyperparameters on the design.

        Args:
            design (DesignSet): Training data.
            kernel (KernelConfig): Kernel, lengthscales in unit-cube coordinates.
            process_variance (float): Prior variance in output units.
            noise_ratio (float): First jitter tried; escalated if factorization fails.

        Raises:
            NumericalFailureError: If no jitter on the ladder makes the matrix PD.
        """
        if process_variance <= 0:
            raise ConfigurationError(
                f'Process variance must be positive, got {process_variance}',
            )
        scaler = StandardScaler().fit(design.outputs.reshape(-1, 1))
        y_std = scaler.transform(design.outputs.reshape(-1, 1)).ravel()
        unit = design.unit_inputs
        factor, jitter = factorize(correlation_matrix(unit, unit, kernel), noise_ratio)
        if jitter > noise_ratio:
            logger.debug(f'Jitter escalated from {noise_ratio:.0e} to {jitter:.0e}')
        return cls(
            design=design,
            kernel=kernel,
            process_variance=float(process_variance),
            noise_ratio=jitter,
            y_mean=float(scaler.mean_[0]),
            y_scale=float(scaler.scale_[0]),
            cov_factor=factor,
            alpha=cho_solve((factor, True), y_std),
        )

    @property
    def training_inputs(self) -> np.ndarray:
        return self.design.inputs

    @property
    def training_outputs(self) -> np.ndarray:
        return self.design.outputs

    @property
    def noise_variance(self) -> float:
        return self.noise_ratio * self.process_variance

    def predict_many(self, points: np.ndarray) -> Prediction:
        """Predictive means and variances at the rows of `points`."""
        unit = self.design.to_unit(points)
        cross = correlation_matrix(self.design.unit_inputs, unit, self.kernel)
        mean = self.y_mean + self.y_scale * (cross.T @ self.alpha)
        reduced = solve_triangular(self.cov_factor, cross, lower=True)
        variance = self.process_variance * (1.0 - np.sum(reduced**2, axis=0))
        return Prediction(mean=mean, variance=np.maximum(variance, 0.0))

    def predict(self, x: np.ndarray) -> Prediction:
        prediction = self.predict_many(np.atleast_2d(x))
        return Prediction(
            mean=float(prediction.mean[0]),
            variance=float(prediction.variance[0]),
        )

    def augmented_variances(
        self,
        pending: np.ndarray,
        points: np.ndarray,
    ) -> np.ndarray:
        """Variances at `points` conditioned on training and pending inputs.

        Pending outputs are never needed. The pending block is conditioned with the
        model's own jitter, so the result equals a refit on the appended inputs.
        """
        pending = np.asarray(pending, dtype=float).reshape(-1, self.design.dim)
        if pending.shape[0] == 0:
            return np.asarray(self.predict_many(points).variance)
        train = self.design.unit_inputs
        unit_pending = self.design.to_unit(pending)
        unit_points = self.design.to_unit(points)
        a = solve_triangular(
            self.cov_factor,
            correlation_matrix(train, unit_pending, self.kernel),
            lower=True,
        )
        b = solve_triangular(
            self.cov_factor,
            correlation_matrix(train, unit_points, self.kernel),
            lower=True,
        )
        schur = correlation_matrix(unit_pending, unit_pending, self.kernel) - a.T @ a
        schur_factor, _ = factorize((schur + schur.T) / 2, self.noise_ratio)
        cross = correlation_matrix(unit_pending, unit_points, self.kernel) - a.T @ b
        w = solve_triangular(schur_factor, cross, lower=True)
        reduced = 1.0 - np.sum(b**2, axis=0) - np.sum(w**2, axis=0)
        return np.maximum(self.process_variance * reduced, 0.0)

    def predict_with_augmented(self, pending: np.ndarray, x: np.ndarray) -> float:
        return float(self.augmented_variances(pending, np.atleast_2d(x))[0])


def fit(
    design: DesignSet,
    kernel_family: KernelFamily = KernelFamily.POWER_EXPONENTIAL,
    bounds: HyperparameterBounds | None = None,
    *,
    power: float = 2.0,
    smoothness: float = 2.5,
    n_starts: int = 5,
    rng: np.random.Generator | int | None = None,
) -> GpModel:
    """Fit lengthscales and process variance by maximum likelihood.

    Args:
        design (DesignSet): At least two training points.
        kernel_family (KernelFamily): Correlation family.
        bounds (HyperparameterBounds, optional): Hyperparameter search box.
        power (float): Power exponential exponent.
        smoothness (float): Matern smoothness.
        n_starts (int): Number of local searches.
        rng (np.random.Generator | int, optional): Source of the starting points.

    Returns:
        GpModel: Conditioned model.

    Raises:
        ConfigurationError: If fewer than two points are given.
        NumericalFailureError: If the fitted covariance cannot be factorized.
    """
    if design.size < 2:  # noqa: PLR2004
        raise ConfigurationError(f'Fitting needs at least 2 points, got {design.size}')
    bounds = bounds or HyperparameterBounds()
    template = KernelConfig(
        family=kernel_family,
        lengthscales=(1.0,) * design.dim,
        power=power,
        smoothness=smoothness,
    )
    scaler = StandardScaler().fit(design.outputs.reshape(-1, 1))
    y_std = scaler.transform(design.outputs.reshape(-1, 1)).ravel()
    kernel, sigma2 = maximize_likelihood(
        design.unit_inputs, y_std, template, bounds, n_starts, rng
    )
    logger.debug(
        f'Fitted lengthscales {kernel.lengthscales} with process variance '
        f'{sigma2:.4g} (standardized) on {design.size} points',
    )
    return GpModel.from_hyperparameters(
        design, kernel, sigma2 * float(scaler.scale_[0]) ** 2
    )


def predict(model: GpModel, x: np.ndarray) -> Prediction:
    return model.predict(x)


def predict_many(model: GpModel, points: np.ndarray) -> Prediction:
    return model.predict_many(points)


def predict_with_augmented(model: GpModel, pending: np.ndarray, x: np.ndarray) -> float:
    """Variance of x once the pending inputs are added to the training set."""
    return model.predict_with_augmented(pending, x)


def augmented_variances(
    model: GpModel,
    pending: np.ndarray,
    points: np.ndarray,
) -> np.ndarray:
    return model.augmented_variances(pending, points)
