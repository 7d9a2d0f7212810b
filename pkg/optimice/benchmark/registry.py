"""The sixteen benchmark problems with their optima and success targets.

Optima and targets are stored as published, not recomputed. Known caveats:

- E7 (six-hump camel) lists an optimum of 1.302 while the negated standard form
  peaks at 1.0316 on its domain; the standard form is used and the published
  targets kept, so E7 targets cannot be reached.
- E10 uses the standard Rosenbrock form on the unusually wide box [-5, 10]^3.
- Stored optima are rounded to three or four significant digits, so evaluations
  may exceed them by up to about 1e-3.
"""

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
import pandas as pd

from optimice.benchmark import functions
from optimice.errors import DomainError, ZeroOptimumError
from optimice.sampling.designs import BoxDomain


@dataclass(frozen=True)
class TestFunction:
    """One benchmark problem, to be maximized.

    Attributes:
        label (str): E1..E16.
        name (str): Function name.
        dim (int): Input dimension.
        domain (BoxDomain): Search box.
        global_opt (float): Published global maximum.
        target_1pct (float): Value counted as a 1% relative-error success.
        target_5pct (float): Value counted as a 5% relative-error success.
        func (Callable): Formula on a 1-D array.
        argmax (tuple[float, ...], optional): Documented maximizer.
    """

    __test__ = False  # not a pytest class despite the name

    label: str
    name: str
    dim: int
    domain: BoxDomain
    global_opt: float
    target_1pct: float
    target_5pct: float
    func: Callable[[np.ndarray], float]
    argmax: tuple[float, ...] | None = None

    @property
    def slug(self) -> str:
        return f"{''.join(ch for ch in self.name.lower() if ch.isalnum())}{self.dim}d"

    def evaluate(self, x: np.ndarray) -> float:
        """Value at x.

        Raises:
            DomainError: If x has the wrong dimension or lies outside the domain.
        """
        x = np.asarray(x, dtype=float).reshape(-1)
        if x.size != self.dim or not self.domain.contains(x):
            raise DomainError(
                f'{self.label} ({self.name}) is undefined at {x.tolist()}'
            )
        return self.func(np.clip(x, self.domain.lb, self.domain.ub))

    def __call__(self, x: np.ndarray) -> float:
        return self.evaluate(x)

    def targets(self) -> tuple[float, float]:
        return self.target_1pct, self.target_5pct


def _box(lower: float, upper: float, dim: int) -> BoxDomain:
    return BoxDomain((lower,) * dim, (upper,) * dim)


def _michalewicz_argmax(dim: int) -> tuple[float, ...]:
    return (2.202906, 1.570796, 1.284992, 1.923058, 1.720470)[:dim]


FUNCTIONS: tuple[TestFunction, ...] = (
    TestFunction(
        'E1', 'Branin', 2, BoxDomain((-5.0, 0.0), (10.0, 15.0)),
        -0.398, -0.402, -0.418, functions.branin, (np.pi, 2.275),
    ),
    TestFunction(
        'E2', 'Griewank', 2, _box(-600, 600, 2),
        0.0, -0.2, -0.9, functions.griewank, (0.0, 0.0),
    ),
    TestFunction(
        'E3', 'Himmelblau', 2, _box(-6, 6, 2),
        0.0, -0.2, -1.0, functions.himmelblau, (3.0, 2.0),
    ),
    TestFunction(
        'E4', 'Hosaki', 2, _box(0, 10, 2),
        2.3458, 2.3223, 2.2285, functions.hosaki, (4.0, 2.0),
    ),
    TestFunction(
        'E5', 'Michalewicz', 2, _box(0, np.pi, 2),
        1.8013, 1.783, 1.711, functions.michalewicz, _michalewicz_argmax(2),
    ),
    TestFunction(
        'E6', 'Sasena', 2, _box(0, 5, 2),
        1.457, 1.442, 1.384, functions.sasena, (2.5044, 2.5778),
    ),
    TestFunction(
        'E7', 'Six-Hump Camel', 2, BoxDomain((-3.0, -2.0), (3.0, 2.0)),
        1.302, 1.289, 1.223, functions.six_hump_camel, None,
    ),
    TestFunction(
        'E8', 'Zakharov', 2, _box(-5, 10, 2),
        0.0, -0.05, -0.25, functions.zakharov, (0.0, 0.0),
    ),
    TestFunction(
        'E9', 'Hartmann', 3, _box(0, 1, 3),
        3.863, 3.824, 3.669, functions.hartmann3, (0.114614, 0.555649, 0.852547),
    ),
    TestFunction(
        'E10', 'Rosenbrock', 3, _box(-5, 10, 3),
        0.0, -1.8, -9.0, functions.rosenbrock, (1.0, 1.0, 1.0),
    ),
    TestFunction(
        'E11', 'Powell', 4, _box(-4, 5, 4),
        0.0, -1.0, -5.0, functions.powell, (0.0, 0.0, 0.0, 0.0),
    ),
    TestFunction(
        'E12', 'Sphere', 4, _box(-5.12, 5.12, 4),
        0.0, -0.1, -0.5, functions.sphere, (0.0, 0.0, 0.0, 0.0),
    ),
    TestFunction(
        'E13', 'Styblinski-Tang', 4, _box(-5, 5, 4),
        156.664, 155.097, 148.831, functions.styblinski_tang, (-2.903534,) * 4,
    ),
    TestFunction(
        'E14', 'Michalewicz', 5, _box(0, np.pi, 5),
        4.688, 4.641, 4.453, functions.michalewicz, _michalewicz_argmax(5),
    ),
    TestFunction(
        'E15', 'Hartmann', 6, _box(0, 1, 6),
        3.322, 3.264, 3.131, functions.hartmann6,
        (0.20169, 0.150011, 0.476874, 0.275332, 0.311652, 0.6573),
    ),
    TestFunction(
        'E16', 'Trid', 6, _box(-36, 36, 6),
        50.0, 49.5, 47.5, functions.trid, (6.0, 10.0, 12.0, 12.0, 10.0, 6.0),
    ),
)

REGISTRY: dict[str, TestFunction] = {
    **{fn.label: fn for fn in FUNCTIONS},
    **{fn.slug: fn for fn in FUNCTIONS},
}


def get_function(key: str) -> TestFunction:
    """Look a function up by label (E1..E16) or slug ('branin2d', 'hartmann6d').

    Raises:
        KeyError: If no function matches.
    """
    normalized = key.strip()
    fn = REGISTRY.get(normalized.upper()) or REGISTRY.get(normalized.lower())
    if fn is None:
        raise KeyError(f'Unknown test function {key!r}; known: {sorted(REGISTRY)}')
    return fn


def targets(fn: TestFunction) -> tuple[float, float]:
    """Published (1%, 5%) targets."""
    return fn.targets()


def evaluate(fn: TestFunction, x: np.ndarray) -> float:
    return fn.evaluate(x)


def relative_error(best: float, f_star: float) -> float:
    """|best - f*| / |f*|.

    Raises:
        ZeroOptimumError: If f* is zero; compare against targets() instead.
    """
    if f_star == 0:
        raise ZeroOptimumError('Relative error is undefined for a zero optimum')
    return abs(best - f_star) / abs(f_star)


def list_functions() -> pd.DataFrame:
    """Summary table of the registry, one row per function."""
    return pd.DataFrame(
        [
            {
                'label': fn.label,
                'name': fn.name,
                'slug': fn.slug,
                'dim': fn.dim,
                'lower': list(fn.domain.lower),
                'upper': list(fn.domain.upper),
                'global_opt': fn.global_opt,
                'target_1pct': fn.target_1pct,
                'target_5pct': fn.target_5pct,
                'argmax': None if fn.argmax is None else list(fn.argmax),
            }
            for fn in FUNCTIONS
        ],
    )
