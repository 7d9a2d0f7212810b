from pathlib import Path

import pytest


@pytest.fixture
def configs_dir() -> Path:
    return Path('configs')


@pytest.fixture
def branin_config_path(configs_dir: Path) -> Path:
    return configs_dir / 'branin_mice_vs_alm.yaml'


@pytest.fixture
def tuning_grid_path(configs_dir: Path) -> Path:
    return configs_dir / 'hosaki_tuning.yaml'
