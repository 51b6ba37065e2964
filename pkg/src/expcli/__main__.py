#!/usr/bin/env python3
"""Experiment CLI - Entry Point.

Runs the built-in presets or a JSON experiment config and writes
`<id>.csv`, `<id>.plot` and `<id>.diagnostics.json`.
"""

import json
import sys
from pathlib import Path
from typing import Optional

# Add paths for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

import click

from common.errors import ConfigValidationError, EpidemicModelError
from common.settings import load_settings
from common.terminal_utils import TerminalLogger, configure_logging
from common.validators import ensure_valid_config, validate_experiment_config
from expcli.config import PRESETS, get_preset, presets
from expcli.runner import emit_outputs, run_experiment


@click.group()
@click.pass_context
def cli(ctx: click.Context):
    """Weighted-network epidemic experiments."""
    settings = load_settings()
    configure_logging(settings.log_level, settings.log_file)
    ctx.obj = {
        'settings': settings,
        'logger': TerminalLogger("expcli", settings.log_file),
    }


@cli.command()
@click.option("--preset", type=click.Choice(sorted(PRESETS)), help="Built-in experiment id")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False, path_type=Path),
              help="JSON experiment config")
@click.option("--mode", type=click.Choice(["analytic", "simulate", "both"]), help="Override the run mode")
@click.option("--n", type=click.IntRange(min=1), help="Population size per replicate")
@click.option("--replicates", type=click.IntRange(min=1), help="Replicates per grid point")
@click.option("--seed", type=click.IntRange(min=0), help="Master seed")
@click.option("--out", type=click.Path(file_okay=False, path_type=Path), help="Output directory")
@click.option("--workers", type=click.IntRange(min=1), help="Worker processes")
@click.option("--dump-replicates", is_flag=True, help="Also write per-replicate CSVs")
@click.pass_context
def run(
    ctx: click.Context,
    preset: Optional[str],
    config_path: Optional[Path],
    mode: Optional[str],
    n: Optional[int],
    replicates: Optional[int],
    seed: Optional[int],
    out: Optional[Path],
    workers: Optional[int],
    dump_replicates: bool,
):
    """Run a preset or a config file."""
    logger: TerminalLogger = ctx.obj['logger']
    settings = ctx.obj['settings']

    if (preset is None) == (config_path is None):
        raise click.UsageError("give exactly one of --preset or --config")

    try:
        base = get_preset(preset) if preset else ensure_valid_config(config_path)
        base = base.with_overrides(**settings.config_overrides())
        config = ensure_valid_config(base.with_overrides(
            mode=mode,
            n=n,
            replicates=replicates,
            seed=seed,
            output=str(out) if out else None,
            workers=workers,
        ))
    except ConfigValidationError as e:
        for error in e.errors:
            logger.error(error)
        ctx.exit(2)

    logger.experiment_header(config.id, {
        "Description": config.description,
        "Mode": config.mode.value,
        "Sweep": f"{config.sweep.parameter} ({len(config.sweep.values)} points)",
        "Simulation": f"n={config.n}, replicates={config.replicates}, seed={config.seed}"
        if config.mode.simulate else None,
        "Workers": config.workers,
        "Output": str(config.output),
    })

    try:
        with logger.status(f"Running {config.id}"):
            table = run_experiment(config)
        paths = emit_outputs(table, config.output, dump_replicates=dump_replicates)
    except EpidemicModelError as e:
        logger.error(f"{config.id} failed: {e}")
        ctx.exit(1)

    logger.result_table(
        config.id,
        table.columns,
        ([row.values.get(c) for c in table.columns] for row in table.rows),
    )
    logger.success(f"CSV: {paths.csv}")
    logger.success(f"Plot script: {paths.plot}")
    logger.success(f"Diagnostics: {paths.diagnostics}")


@cli.command("dump-preset")
@click.argument("preset_id", type=click.Choice(sorted(PRESETS)))
@click.option("--out", "out_file", type=click.Path(dir_okay=False, path_type=Path),
              help="Write to this file instead of stdout")
def dump_preset(preset_id: str, out_file: Optional[Path]):
    """Print a preset as an editable JSON config."""
    text = get_preset(preset_id).to_json() + "\n"
    if out_file:
        out_file.parent.mkdir(parents=True, exist_ok=True)
        out_file.write_text(text)
    else:
        click.echo(text, nl=False)


@cli.command("list-presets")
@click.pass_context
def list_presets(ctx: click.Context):
    """List built-in presets."""
    logger: TerminalLogger = ctx.obj['logger']
    logger.result_table(
        "Presets",
        ("id", "mode", "sweep", "columns", "description"),
        (
            (p.id, p.mode.value, p.sweep.parameter, ",".join(p.columns()), p.description)
            for p in presets()
        ),
    )


@cli.command()
@click.argument("config_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.pass_context
def validate(ctx: click.Context, config_file: Path):
    """Check a JSON config and list every problem."""
    logger: TerminalLogger = ctx.obj['logger']
    try:
        data = json.loads(config_file.read_text())
    except json.JSONDecodeError as e:
        logger.error(f"{config_file}: {e}")
        ctx.exit(2)

    errors = validate_experiment_config(data)
    if errors:
        for error in errors:
            logger.error(error)
        ctx.exit(2)
    logger.success(f"{config_file} is valid")


def main():
    cli(prog_name="python -m src.expcli")


if __name__ == "__main__":
    main()
