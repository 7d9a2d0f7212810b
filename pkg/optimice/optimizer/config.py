"""Optimizer settings.

Iteration counts and candidate-set sizes default per input dimension:

    dim            2    3    4    5    6
    iterations    20   30   40   50   60
    n_cand (MICE) 50  100  150  200  250

with n_init = 2, batch_size = 5 and n_search = 10 000. The ALM variant scores the
whole search set (n_cand = n_search).
"""

from collections.abc import Mapping
from dataclasses import asdict, dataclass, field, fields, replace
from enum import Enum
from typing import Any

from optimice.acquisition.functions import BetaSchedule
from optimice.design_criteria.criteria import DEFAULT_GRID_CAP, DEFAULT_NUGGET
from optimice.emulator.kernels import KernelFamily
from optimice.emulator.likelihood import HyperparameterBounds
from optimice.errors import ConfigurationError

# dim -> (iterations, MICE candidate count)
TABLE_SETTINGS = {2: (20, 50), 3: (30, 100), 4: (40, 150), 5: (50, 200), 6: (60, 250)}


class ExploreVariant(str, Enum):
    MICE = 'MICE'
    ALM = 'ALM'

    @classmethod
    def _missing_(cls, value: object) -> 'ExploreVariant | None':
        if isinstance(value, str):
            return next((m for m in cls if m.value == value.upper()), None)
        return None


def table_settings(dim: int) -> tuple[int, int]:
    """Iterations and MICE candidate count for a dimension.

    Dimensions outside the table follow its pattern: 10 * dim iterations and
    50 * (dim - 1) candidates, at least 50.
    """
    if dim in TABLE_SETTINGS:
        return TABLE_SETTINGS[dim]
    return 10 * dim, max(50, 50 * (dim - 1))


@dataclass(frozen=True)
class OptimizerConfig:
    """Settings of one optimizer run.

    `iterations` and `n_cand` left as None are filled from the per-dimension
    defaults by `resolved`.
    """

    n_init: int = 2
    iterations: int | None = None
    batch_size: int = 5
    n_search: int = 10_000
    n_cand: int | None = None
    nugget: float = DEFAULT_NUGGET
    beta: BetaSchedule = field(default_factory=BetaSchedule)
    kernel_family: KernelFamily = KernelFamily.POWER_EXPONENTIAL
    power: float = 2.0
    smoothness: float = 2.5
    seed: int = 0
    explore_variant: ExploreVariant = ExploreVariant.MICE
    mice_grid_cap: int = DEFAULT_GRID_CAP
    n_starts: int = 5
    init_restarts: int = 100
    eval_workers: int = 1
    hyperparameter_bounds: HyperparameterBounds = field(
        default_factory=HyperparameterBounds,
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, 'kernel_family', KernelFamily(self.kernel_family))
        object.__setattr__(
            self, 'explore_variant', ExploreVariant(self.explore_variant)
        )
        counts = {
            'n_init': self.n_init,
            'batch_size': self.batch_size,
            'n_search': self.n_search,
            'mice_grid_cap': self.mice_grid_cap,
            'n_starts': self.n_starts,
            'init_restarts': self.init_restarts,
            'eval_workers': self.eval_workers,
        }
        if self.n_cand is not None:
            counts['n_cand'] = self.n_cand
        invalid = {k: v for k, v in counts.items() if v < 1}
        if invalid:
            raise ConfigurationError(f'Counts must be >= 1, got {invalid}')
        if self.iterations is not None and self.iterations < 0:
            raise ConfigurationError(f'iterations must be >= 0, got {self.iterations}')
        if self.n_cand is not None and self.n_cand > self.n_search:
            raise ConfigurationError(
                f'n_cand ({self.n_cand}) cannot exceed n_search ({self.n_search})',
            )
        if self.batch_size > self.n_search:
            raise ConfigurationError(
                f'batch_size ({self.batch_size}) cannot exceed n_search '
                f'({self.n_search})',
            )
        if self.nugget < 0:
            raise ConfigurationError(f'nugget must be >= 0, got {self.nugget}')

    @classmethod
    def for_dimension(
        cls,
        dim: int,
        variant: ExploreVariant = ExploreVariant.MICE,
        **overrides: Any,
    ) -> 'OptimizerConfig':
        """Default settings for a problem of the given dimension."""
        return cls(explore_variant=variant, **overrides).resolved(dim)

    def resolved(self, dim: int) -> 'OptimizerConfig':
        """Copy with unset iterations and n_cand filled for `dim`."""
        iterations, n_cand = table_settings(dim)
        if self.explore_variant is ExploreVariant.ALM:
            n_cand = self.n_search
        return replace(
            self,
            iterations=self.iterations if self.iterations is not None else iterations,
            n_cand=self.n_cand
            if self.n_cand is not None
            else min(n_cand, self.n_search),
        )

    def with_seed(self, seed: int) -> 'OptimizerConfig':
        return replace(self, seed=seed)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'OptimizerConfig':
        """Build from plain mappings as read from YAML or JSON.

        Raises:
            ConfigurationError: On unknown keys.
        """
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigurationError(f'Unknown optimizer settings: {sorted(unknown)}')
        values = dict(data)
        if isinstance(values.get('beta'), Mapping):
            values['beta'] = BetaSchedule(**values['beta'])
        if isinstance(values.get('hyperparameter_bounds'), Mapping):
            values['hyperparameter_bounds'] = HyperparameterBounds(
                **{
                    k: tuple(v)
                    for k, v in values['hyperparameter_bounds'].items()
                },
            )
        return cls(**values)

    def to_dict(self) -> dict[str, Any]:
        """Plain, YAML-safe mapping; inverse of from_dict."""

        def plain(value: Any) -> Any:
            if isinstance(value, Enum):
                return value.value
            if isinstance(value, dict):
                return {k: plain(v) for k, v in value.items()}
            if isinstance(value, tuple | list):
                return [plain(v) for v in value]
            return value

        return plain(asdict(self))
