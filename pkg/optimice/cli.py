"""Command-line entry point: `optimice run | bench | list-functions | tune`."""

from dataclasses import replace
from pathlib import Path
from typing import Optional

import pandas as pd
import typer
import yaml

from optimice.benchmark.registry import get_function, list_functions
from optimice.experiments.campaign import CampaignResult, run_campaign
from optimice.experiments.config import DEFAULT_SCALINGS, CampaignConfig, TuningGrid
from optimice.experiments.summary import evaluations_table
from optimice.logs import configure_logging
from optimice.optimizer.config import ExploreVariant, OptimizerConfig

app = typer.Typer(help='Batch GP optimization benchmarks.', no_args_is_help=True)

WorkersOption = typer.Option(
    None,
    '--workers',
    envvar='OPTIMICE_WORKERS',
    help='Trials run concurrently.',
)
LogLevelOption = typer.Option('INFO', '--log-level', help='Logging level.')


def _report(result: CampaignResult) -> None:
    if not result.summary.empty:
        with pd.option_context('display.width', 200, 'display.max_columns', None):
            typer.echo(result.summary.to_string(index=False))
            typer.echo(evaluations_table(result.summary).to_string())
    if result.failures:
        typer.echo(f'{len(result.failures)} trial(s) failed', err=True)
        raise typer.Exit(code=1)


def _campaign(config: CampaignConfig) -> None:
    _report(run_campaign(config))


@app.command()
def run(
    config: Path = typer.Option(..., '--config', exists=True, dir_okay=False),
    output_dir: Optional[Path] = typer.Option(None, '--output-dir'),
    workers: Optional[int] = WorkersOption,
    log_level: str = LogLevelOption,
) -> None:
    """Run the campaign described by a YAML or JSON file."""
    configure_logging(log_level.upper())
    try:
        campaign = CampaignConfig.from_yaml(config)
        if output_dir is not None:
            campaign = replace(campaign, output_dir=output_dir)
        if workers is not None:
            campaign = replace(campaign, workers=workers)
    except (KeyError, TypeError, ValueError, yaml.YAMLError) as error:
        typer.echo(f'Invalid configuration: {error}', err=True)
        raise typer.Exit(code=2) from error
    _campaign(campaign)


@app.command()
def bench(
    function: str = typer.Option(..., '--function', help='Label or slug, e.g. E1.'),
    variant: str = typer.Option('mice', '--variant', help='mice or alm.'),
    trials: int = typer.Option(20, '--trials'),
    seed: int = typer.Option(0, '--seed', help='Seed of the first trial.'),
    iterations: Optional[int] = typer.Option(None, '--iterations'),
    output_dir: Path = typer.Option(Path('results'), '--output-dir'),
    workers: Optional[int] = WorkersOption,
    log_level: str = LogLevelOption,
) -> None:
    """Run one function with one variant at the default settings."""
    configure_logging(log_level.upper())
    try:
        explore = ExploreVariant(variant)
        campaign = CampaignConfig(
            function_labels=(get_function(function).label,),
            optimizer_configs={
                explore.value.lower(): OptimizerConfig(
                    explore_variant=explore,
                    iterations=iterations,
                ),
            },
            n_trials=trials,
            seed_base=seed,
            output_dir=output_dir,
            workers=workers or 1,
        )
    except (KeyError, ValueError) as error:
        typer.echo(f'Invalid arguments: {error}', err=True)
        raise typer.Exit(code=2) from error
    _campaign(campaign)


@app.command('list-functions')
def list_functions_command() -> None:
    """Print the benchmark registry."""
    with pd.option_context('display.width', 200, 'display.max_columns', None):
        typer.echo(list_functions().to_string(index=False))


@app.command()
def tune(
    function: str = typer.Option(..., '--function'),
    grid: Optional[Path] = typer.Option(None, '--grid', exists=True, dir_okay=False),
    trials: int = typer.Option(10, '--trials'),
    seed: int = typer.Option(0, '--seed'),
    default_scalings: bool = typer.Option(
        False,
        '--default-scalings',
        help='Also run 0.5f(x), 2f(x), f(0.5x) and f(2x).',
    ),
    output_dir: Path = typer.Option(Path('results/tuning'), '--output-dir'),
    workers: Optional[int] = WorkersOption,
    log_level: str = LogLevelOption,
) -> None:
    """Vary one setting at a time around the defaults (or a grid file)."""
    configure_logging(log_level.upper())
    try:
        tuning = TuningGrid.from_yaml(grid) if grid is not None else TuningGrid()
        if default_scalings and not tuning.scalings:
            tuning = replace(tuning, scalings=DEFAULT_SCALINGS)
        campaign = tuning.to_campaign(function, trials, seed, output_dir, workers or 1)
    except (KeyError, TypeError, ValueError, yaml.YAMLError) as error:
        typer.echo(f'Invalid arguments: {error}', err=True)
        raise typer.Exit(code=2) from error
    _campaign(campaign)


if __name__ == '__main__':
    app()
