"""Profiled Gaussian log-likelihood and its multistart maximization.

The process variance has the closed-form maximizer y' R^-1 y / n for fixed
lengthscales, clipped to its bounds, so the numerical search runs over
log-lengthscales only.
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy.linalg import cho_solve
from scipy.optimize import Bounds, minimize
from scipy.stats import qmc

from optimice.emulator.kernels import KernelConfig, correlation_matrix
from optimice.emulator.linalg import JITTER_START, factorize
from optimice.errors import ConfigurationError, NumericalFailureError

logger = logging.getLogger(__name__)

# Returned to the local search where the covariance cannot be factorized.
FAILED_LIKELIHOOD_PENALTY = 1e25


@dataclass(frozen=True)
class HyperparameterBounds:
    """Search box for lengthscales (unit-cube coordinates) and process variance.

    The process variance bounds apply to standardized outputs.
    """

    lengthscale: tuple[float, float] = (1e-2, 1e1)
    process_variance: tuple[float, float] = (1e-6, 1e4)

    def __post_init__(self) -> None:
        for name in ('lengthscale', 'process_variance'):
            lo, up = getattr(self, name)
            if not 0 < lo < up:
                raise ConfigurationError(f'Invalid {name} bounds ({lo}, {up})')


def _profiled(
    corr: np.ndarray,
    y: np.ndarray,
    bounds: HyperparameterBounds,
) -> tuple[float, float, float]:
    """Negative log-likelihood, profiled process variance and jitter used."""
    n = y.shape[0]
    factor, jitter = factorize(corr, JITTER_START)
    quad = float(y @ cho_solve((factor, True), y))
    sigma2 = float(np.clip(quad / n, *bounds.process_variance))
    log_det = 2.0 * np.sum(np.log(np.diag(factor)))
    nll = 0.5 * (n * np.log(2 * np.pi * sigma2) + log_det + quad / sigma2)
    return float(nll), sigma2, jitter


def log_marginal_likelihood(
    unit_inputs: np.ndarray,
    y: np.ndarray,
    kernel: KernelConfig,
    process_variance: float,
    noise_ratio: float = JITTER_START,
) -> float:
    """Gaussian log-likelihood of standardized outputs for fixed hyperparameters."""
    n = y.shape[0]
    corr = correlation_matrix(unit_inputs, unit_inputs, kernel)
    factor, _ = factorize(corr, noise_ratio)
    quad = float(y @ cho_solve((factor, True), y))
    log_det = 2.0 * np.sum(np.log(np.diag(factor)))
    return float(
        -0.5 * (n * np.log(2 * np.pi * process_variance) + log_det)
        - 0.5 * quad / process_variance
    )


def negative_log_likelihood(
    log_lengthscales: np.ndarray,
    unit_inputs: np.ndarray,
    y: np.ndarray,
    kernel: KernelConfig,
    bounds: HyperparameterBounds,
) -> float:
    cfg = kernel.with_lengthscales(np.exp(log_lengthscales))
    corr = correlation_matrix(unit_inputs, unit_inputs, cfg)
    try:
        return _profiled(corr, y, bounds)[0]
    except NumericalFailureError:
        return FAILED_LIKELIHOOD_PENALTY


def maximize_likelihood(
    unit_inputs: np.ndarray,
    y: np.ndarray,
    kernel: KernelConfig,
    bounds: HyperparameterBounds,
    n_starts: int = 5,
    rng: np.random.Generator | None = None,
) -> tuple[KernelConfig, float]:
    """Multistart L-BFGS-B over log-lengthscales.

    Starting points form a Latin hypercube over the log-bound box.

    Returns:
        tuple[KernelConfig, float]: Fitted kernel and profiled process variance
            (standardized units).
    """
    rng = np.random.default_rng(rng)
    dim = unit_inputs.shape[1]
    log_lo, log_up = np.log(bounds.lengthscale)
    starts = log_lo + (log_up - log_lo) * qmc.LatinHypercube(d=dim, seed=rng).random(
        n_starts,
    )
    box = Bounds(lb=np.full(dim, log_lo), ub=np.full(dim, log_up))
    best_x, best_fun = starts[0], np.inf
    for x0 in starts:
        result = minimize(
            negative_log_likelihood,
            x0,
            args=(unit_inputs, y, kernel, bounds),
            method='L-BFGS-B',
            bounds=box,
            options={'maxiter': 200},
        )
        logger.debug(f'Multistart from {np.exp(x0)} reached nll={result.fun:.6g}')
        if result.fun < best_fun:
            best_x, best_fun = result.x, result.fun
    fitted = kernel.with_lengthscales(np.exp(np.clip(best_x, log_lo, log_up)))
    corr = correlation_matrix(unit_inputs, unit_inputs, fitted)
    _, sigma2, _ = _profiled(corr, y, bounds)
    return fitted, sigma2
