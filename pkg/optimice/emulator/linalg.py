"""Cholesky factorization with a bounded jitter ladder."""

import logging

import numpy as np
from scipy.linalg import LinAlgError, cholesky

from optimice.errors import NumericalFailureError

logger = logging.getLogger(__name__)

JITTER_START = 1e-8
JITTER_STOP = 1e-2
JITTER_FACTOR = 10.0


def jitter_ladder(start: float = JITTER_START) -> list[float]:
    """Relative jitters tried in order: start, 10 * start, ... up to 1e-2."""
    ladder = [start]
    while ladder[-1] * JITTER_FACTOR <= JITTER_STOP * (1 + 1e-9):
        ladder.append(ladder[-1] * JITTER_FACTOR)
    return ladder


def factorize(
    matrix: np.ndarray,
    start: float = JITTER_START,
) -> tuple[np.ndarray, float]:
    """Lower Cholesky factor of `matrix + jitter * I`, smallest working jitter.

    Args:
        matrix (np.ndarray): Symmetric correlation-scale matrix.
        start (float): First jitter tried.

    Returns:
        tuple[np.ndarray, float]: Lower-triangular factor and the jitter used.

    Raises:
        NumericalFailureError: If every rung of the ladder fails.
    """
    ladder = jitter_ladder(start)
    identity = np.eye(matrix.shape[0])
    for jitter in ladder:
        try:
            factor = cholesky(matrix + jitter * identity, lower=True)
        except LinAlgError:
            logger.debug(f'Cholesky failed with jitter {jitter:.0e}, escalating')
            continue
        if np.all(np.isfinite(factor)):
            return factor, jitter
    raise NumericalFailureError('Covariance matrix is not factorizable', ladder)
