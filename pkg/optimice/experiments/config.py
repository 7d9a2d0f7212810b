"""Campaign and tuning-grid configuration files.

Files are YAML (any JSON document is valid YAML). A campaign file mirrors
CampaignConfig:

    function_labels: [E1, E12]
    optimizer_configs:
      mice: {explore_variant: MICE}
      alm: {explore_variant: ALM}
    n_trials: 10
    seed_base: 0
    output_dir: results/e1
    workers: 4
    scalings: [{vertical: 0.5}, {horizontal: 2}]

A tuning grid names a base optimizer setting and scenarios overriding it:

    base: {batch_size: 5}
    scenarios:
      T10: {iterations: 10}
    scalings: [{vertical: 0.5}]
"""

import hashlib
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import yaml

from optimice.benchmark.registry import TestFunction, get_function
from optimice.benchmark.scaling import ScaledFunction, make_scaled
from optimice.errors import ConfigurationError
from optimice.optimizer.config import OptimizerConfig, table_settings

CAMPAIGN_KEYS = {
    'function_labels',
    'optimizer_configs',
    'n_trials',
    'seed_base',
    'output_dir',
    'workers',
    'scalings',
}


@dataclass(frozen=True)
class Scaling:
    vertical: float = 1.0
    horizontal: float = 1.0

    def apply(self, fn: TestFunction) -> ScaledFunction:
        return make_scaled(fn, self.vertical, self.horizontal)


def _default_optimizers() -> dict[str, OptimizerConfig]:
    return {'mice': OptimizerConfig()}


@dataclass(frozen=True, eq=False)
class CampaignConfig:
    """Functions, optimizer variants and trial count of a campaign.

    Trial i of every (function, variant) pair runs with seed seed_base + i. Each
    scaling adds a scaled copy of every function next to the unscaled one.
    """

    function_labels: tuple[str, ...]
    optimizer_configs: dict[str, OptimizerConfig] = field(
        default_factory=_default_optimizers,
    )
    n_trials: int = 1
    seed_base: int = 0
    output_dir: Path = Path('results')
    workers: int = 1
    scalings: tuple[Scaling, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, 'function_labels', tuple(self.function_labels))
        object.__setattr__(self, 'output_dir', Path(self.output_dir))
        object.__setattr__(self, 'scalings', tuple(self.scalings))
        if not self.function_labels:
            raise ConfigurationError('A campaign needs at least one function')
        if not self.optimizer_configs:
            raise ConfigurationError('A campaign needs at least one optimizer config')
        if self.n_trials < 1:
            raise ConfigurationError(f'n_trials must be >= 1, got {self.n_trials}')
        if self.workers < 1:
            raise ConfigurationError(f'workers must be >= 1, got {self.workers}')
        try:
            for label in self.function_labels:
                get_function(label)
        except KeyError as error:
            raise ConfigurationError(str(error)) from error

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'CampaignConfig':
        unknown = set(data) - CAMPAIGN_KEYS
        if unknown:
            raise ConfigurationError(f'Unknown campaign settings: {sorted(unknown)}')
        values = dict(data)
        labels = values.get('function_labels', ())
        values['function_labels'] = (labels,) if isinstance(labels, str) else labels
        if 'optimizer_configs' in values:
            values['optimizer_configs'] = {
                name: OptimizerConfig.from_dict(settings or {})
                for name, settings in values['optimizer_configs'].items()
            }
        values['scalings'] = tuple(
            Scaling(**scaling) for scaling in values.get('scalings') or ()
        )
        return cls(**values)

    @classmethod
    def from_yaml(cls, path: str | Path) -> 'CampaignConfig':
        with Path(path).open(encoding='utf-8') as stream:
            data = yaml.safe_load(stream) or {}
        if not isinstance(data, Mapping):
            raise ConfigurationError(f'{path} does not hold a mapping')
        return cls.from_dict(data)

    def to_dict(self) -> dict[str, Any]:
        return {
            'function_labels': list(self.function_labels),
            'optimizer_configs': {
                name: config.to_dict()
                for name, config in self.optimizer_configs.items()
            },
            'n_trials': self.n_trials,
            'seed_base': self.seed_base,
            'output_dir': str(self.output_dir),
            'workers': self.workers,
            'scalings': [
                {'vertical': s.vertical, 'horizontal': s.horizontal}
                for s in self.scalings
            ],
        }

    @property
    def digest(self) -> str:
        """SHA-256 of the canonical YAML dump; unaffected by key order or comments."""
        canonical = yaml.safe_dump(self.to_dict(), sort_keys=True)
        return hashlib.sha256(canonical.encode('utf-8')).hexdigest()

    def problems(self) -> list[TestFunction | ScaledFunction]:
        """Every function to run, each unscaled version followed by its scalings."""
        problems: list[TestFunction | ScaledFunction] = []
        for label in self.function_labels:
            fn = get_function(label)
            problems.append(fn)
            problems.extend(scaling.apply(fn) for scaling in self.scalings)
        return problems

    def seeds(self) -> list[int]:
        return [self.seed_base + trial for trial in range(self.n_trials)]


def default_scenarios(dim: int) -> dict[str, dict[str, Any]]:
    """Base scenario plus eleven one-setting variations of it.

    Iterations at 0.5x, 1.5x and 2.5x the default, batch sizes 2, 10 and 15,
    search sets of 50, 1e3 and 1e5 points, and half or double the candidates.
    """
    iterations, n_cand = table_settings(dim)
    scenarios: dict[str, dict[str, Any]] = {'base': {}}
    for factor in (0.5, 1.5, 2.5):
        scenarios[f'T{int(iterations * factor)}'] = {
            'iterations': int(iterations * factor),
        }
    for batch_size in (2, 10, 15):
        scenarios[f'K{batch_size}'] = {'batch_size': batch_size}
    for n_search in (50, 1_000, 100_000):
        scenarios[f'Nsearch{n_search}'] = {
            'n_search': n_search,
            'n_cand': min(n_cand, n_search),
        }
    for factor in (0.5, 2):
        scenarios[f'Ncand{int(n_cand * factor)}'] = {'n_cand': int(n_cand * factor)}
    return scenarios


DEFAULT_SCALINGS = (
    Scaling(vertical=0.5),
    Scaling(vertical=2.0),
    Scaling(horizontal=0.5),
    Scaling(horizontal=2.0),
)


@dataclass(frozen=True)
class TuningGrid:
    """One-setting-at-a-time variations of a base optimizer setting."""

    base: Mapping[str, Any] = field(default_factory=dict)
    scenarios: Mapping[str, Mapping[str, Any]] | None = None
    scalings: tuple[Scaling, ...] = ()

    @classmethod
    def from_yaml(cls, path: str | Path) -> 'TuningGrid':
        with Path(path).open(encoding='utf-8') as stream:
            data = yaml.safe_load(stream) or {}
        if not isinstance(data, Mapping):
            raise ConfigurationError(f'{path} does not hold a mapping')
        unknown = set(data) - {'base', 'scenarios', 'scalings'}
        if unknown:
            raise ConfigurationError(f'Unknown tuning settings: {sorted(unknown)}')
        return cls(
            base=data.get('base') or {},
            scenarios=data.get('scenarios'),
            scalings=tuple(Scaling(**s) for s in data.get('scalings') or ()),
        )

    def optimizer_configs(self, dim: int) -> dict[str, OptimizerConfig]:
        scenarios = self.scenarios
        if scenarios is None:
            scenarios = default_scenarios(dim)
        return {
            name: OptimizerConfig.from_dict({**self.base, **(overrides or {})})
            for name, overrides in scenarios.items()
        }

    def to_campaign(
        self,
        function_label: str,
        n_trials: int,
        seed_base: int = 0,
        output_dir: str | Path = Path('results'),
        workers: int = 1,
    ) -> CampaignConfig:
        fn = get_function(function_label)
        return CampaignConfig(
            function_labels=(fn.label,),
            optimizer_configs=self.optimizer_configs(fn.dim),
            n_trials=n_trials,
            seed_base=seed_base,
            output_dir=Path(output_dir),
            workers=workers,
            scalings=self.scalings,
        )
