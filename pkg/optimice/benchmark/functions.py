"""Test-function formulas in maximization orientation.

Standard minimization forms are negated. Each function takes a 1-D array.
"""

import numpy as np

HARTMANN3_ALPHA = np.array([1.0, 1.2, 3.0, 3.2])
HARTMANN3_A = np.array(
    [[3.0, 10.0, 30.0], [0.1, 10.0, 35.0], [3.0, 10.0, 30.0], [0.1, 10.0, 35.0]],
)
HARTMANN3_P = 1e-4 * np.array(
    [
        [3689, 1170, 2673],
        [4699, 4387, 7470],
        [1091, 8732, 5547],
        [381, 5743, 8828],
    ],
)
HARTMANN6_ALPHA = HARTMANN3_ALPHA
HARTMANN6_A = np.array(
    [
        [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
        [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
        [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
        [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
    ],
)
HARTMANN6_P = 1e-4 * np.array(
    [
        [1312, 1696, 5569, 124, 8283, 5886],
        [2329, 4135, 8307, 3736, 1004, 9991],
        [2348, 1451, 3522, 2883, 3047, 6650],
        [4047, 8828, 8732, 5743, 1091, 381],
    ],
)


def branin(x: np.ndarray) -> float:
    a, b, c = 1.0, 5.1 / (4 * np.pi**2), 5.0 / np.pi
    r, s, t = 6.0, 10.0, 1.0 / (8 * np.pi)
    x1, x2 = x
    value = a * (x2 - b * x1**2 + c * x1 - r) ** 2 + s * (1 - t) * np.cos(x1) + s
    return float(-value)


def griewank(x: np.ndarray) -> float:
    i = np.arange(1, x.size + 1)
    value = 1 + np.sum(x**2) / 4000 - np.prod(np.cos(x / np.sqrt(i)))
    return float(-value)


def himmelblau(x: np.ndarray) -> float:
    x1, x2 = x
    return float(-((x1**2 + x2 - 11) ** 2 + (x1 + x2**2 - 7) ** 2))


def hosaki(x: np.ndarray) -> float:
    x1, x2 = x
    poly = 1 - 8 * x1 + 7 * x1**2 - 7 / 3 * x1**3 + 0.25 * x1**4
    return float(-(poly * x2**2 * np.exp(-x2)))


def michalewicz(x: np.ndarray, m: int = 10) -> float:
    i = np.arange(1, x.size + 1)
    return float(np.sum(np.sin(x) * np.sin(i * x**2 / np.pi) ** (2 * m)))


def sasena(x: np.ndarray) -> float:
    """Sasena's 'mystery' function."""
    x1, x2 = x
    value = (
        2
        + 0.01 * (x2 - x1**2) ** 2
        + (1 - x1) ** 2
        + 2 * (2 - x2) ** 2
        + 7 * np.sin(0.5 * x1) * np.sin(0.7 * x1 * x2)
    )
    return float(-value)


def six_hump_camel(x: np.ndarray) -> float:
    x1, x2 = x
    value = (4 - 2.1 * x1**2 + x1**4 / 3) * x1**2 + x1 * x2 + (-4 + 4 * x2**2) * x2**2
    return float(-value)


def zakharov(x: np.ndarray) -> float:
    weighted = np.sum(0.5 * np.arange(1, x.size + 1) * x)
    return float(-(np.sum(x**2) + weighted**2 + weighted**4))


def _hartmann(x: np.ndarray, alpha: np.ndarray, a: np.ndarray, p: np.ndarray) -> float:
    return float(np.sum(alpha * np.exp(-np.sum(a * (x - p) ** 2, axis=1))))


def hartmann3(x: np.ndarray) -> float:
    return _hartmann(x, HARTMANN3_ALPHA, HARTMANN3_A, HARTMANN3_P)


def hartmann6(x: np.ndarray) -> float:
    return _hartmann(x, HARTMANN6_ALPHA, HARTMANN6_A, HARTMANN6_P)


def rosenbrock(x: np.ndarray) -> float:
    return float(-np.sum(100 * (x[1:] - x[:-1] ** 2) ** 2 + (1 - x[:-1]) ** 2))


def powell(x: np.ndarray) -> float:
    """Powell's singular function, dimension a multiple of 4."""
    terms = x.reshape(-1, 4)
    x1, x2, x3, x4 = terms.T
    value = (
        (x1 + 10 * x2) ** 2
        + 5 * (x3 - x4) ** 2
        + (x2 - 2 * x3) ** 4
        + 10 * (x1 - x4) ** 4
    )
    return float(-np.sum(value))


def sphere(x: np.ndarray) -> float:
    return float(-np.sum(x**2))


def styblinski_tang(x: np.ndarray) -> float:
    return float(-0.5 * np.sum(x**4 - 16 * x**2 + 5 * x))


def trid(x: np.ndarray) -> float:
    return float(-(np.sum((x - 1) ** 2) - np.sum(x[1:] * x[:-1])))
