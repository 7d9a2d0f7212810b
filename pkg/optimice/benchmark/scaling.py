"""Vertically and horizontally scaled versions of a test function.

The scaled function is a * f(b * x) on the domain divided by b, so the maximizer
moves to argmax / b and the optimum becomes a * f*. Targets scale with a.
"""

from dataclasses import dataclass

import numpy as np

from optimice.benchmark.registry import TestFunction
from optimice.errors import ConfigurationError
from optimice.sampling.designs import BoxDomain


def _describe(vertical: float, horizontal: float) -> str:
    outer = '' if vertical == 1 else f'{vertical:g}'
    inner = 'x' if horizontal == 1 else f'{horizontal:g}x'
    return f'{outer}f({inner})'


@dataclass(frozen=True)
class ScaledFunction:
    base: TestFunction
    vertical: float = 1.0
    horizontal: float = 1.0

    def __post_init__(self) -> None:
        if self.vertical <= 0 or self.horizontal <= 0:
            raise ConfigurationError(
                f'Scale factors must be positive, got vertical={self.vertical}, '
                f'horizontal={self.horizontal}',
            )

    @property
    def label(self) -> str:
        return f'{self.base.label}:{_describe(self.vertical, self.horizontal)}'

    @property
    def name(self) -> str:
        return f'{self.base.name} {_describe(self.vertical, self.horizontal)}'

    @property
    def slug(self) -> str:
        return f'{self.base.slug}-v{self.vertical:g}-h{self.horizontal:g}'

    @property
    def dim(self) -> int:
        return self.base.dim

    @property
    def domain(self) -> BoxDomain:
        return self.base.domain.rescaled(self.horizontal)

    @property
    def global_opt(self) -> float:
        return self.vertical * self.base.global_opt

    @property
    def target_1pct(self) -> float:
        return self.vertical * self.base.target_1pct

    @property
    def target_5pct(self) -> float:
        return self.vertical * self.base.target_5pct

    @property
    def argmax(self) -> tuple[float, ...] | None:
        if self.base.argmax is None:
            return None
        return tuple(np.asarray(self.base.argmax) / self.horizontal)

    def targets(self) -> tuple[float, float]:
        return self.target_1pct, self.target_5pct

    def evaluate(self, x: np.ndarray) -> float:
        x = np.asarray(x, dtype=float)
        return self.vertical * self.base.evaluate(self.horizontal * x)

    def __call__(self, x: np.ndarray) -> float:
        return self.evaluate(x)


def make_scaled(
    fn: TestFunction,
    vertical: float = 1.0,
    horizontal: float = 1.0,
) -> ScaledFunction:
    return ScaledFunction(fn, vertical, horizontal)
