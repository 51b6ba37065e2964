"""Run an experiment over its sweep grid and write the result artifacts."""

import asyncio
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional, Union

import pandas as pd

from analytics.closed_forms import closed_form_r0
from analytics.extinction import extinction_probabilities
from analytics.offspring import build_offspring_matrix
from analytics.spectral import power_iteration
from common.experiment_config import ExperimentConfig
from common.result_store import ResultPaths, ResultStore
from common.validators import ensure_valid_config
from common.worker_pool import gather_in_pool
from distributions.moments import moments, trait_moments
from distributions.negbin import negbin_params
from distributions.spec import laws_from_config
from epidemic.harness import (
    OutbreakModel,
    OutbreakStats,
    ThresholdRule,
    replicate_jobs,
    run_replicate,
    summarize_replicates,
    write_replicate_csv,
)

logger = logging.getLogger(__name__)


@dataclass
class ResultRow:
    """One grid point: CSV values (None = empty cell) and diagnostics."""

    values: dict[str, Optional[float]]
    diagnostics: dict[str, Any] = field(default_factory=dict)


@dataclass
class ResultTable:
    id: str
    description: str
    columns: tuple[str, ...]
    rows: list[ResultRow]
    stats: list[Optional[OutbreakStats]] = field(default_factory=list, repr=False)
    """Simulation summaries per row (empty in analytic mode)"""

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [[row.values.get(c) for c in self.columns] for row in self.rows],
            columns=list(self.columns),
            dtype=float,
        )


def analyze_grid_point(config: ExperimentConfig, grid_index: int) -> ResultRow:
    """Sweep-dependent inputs and analytic quantities at one grid point."""
    value = config.sweep.values[grid_index]
    laws = laws_from_config(config, value)
    values: dict[str, Optional[float]] = {config.sweep.parameter: value}

    degree = moments(laws.degree)
    traits = trait_moments(laws.traits)
    diagnostics: dict[str, Any] = {
        'grid_index': grid_index,
        config.sweep.parameter: value,
        'degree_mean': degree.mean,
        'degree_variance': degree.variance,
        'trait_correlation': traits.correlation,
        'trait_types': len(laws.traits.atoms),
    }

    if config.sweep.parameter == "r":
        values["cv_w"] = negbin_params(value, config.weight.mu_w).cv

    if config.mode.analytic:
        matrix = build_offspring_matrix(laws.degree, laws.kernel, laws.traits)
        perron = power_iteration(matrix)
        diagnostics['types'] = matrix.space.size
        diagnostics['power_iterations'] = perron.iterations

        if "r0" in config.quantities:
            values["r0"] = perron.value
        if "r0_closed_form" in config.quantities:
            values["r0_closed_form"] = closed_form_r0(laws.degree, laws.kernel, laws.traits)
        if "pi_analytic" in config.quantities:
            solution = extinction_probabilities(
                laws.degree, laws.kernel, laws.traits, matrix=matrix
            )
            values["pi_analytic"] = solution.pi
            diagnostics['extinction_iterations'] = solution.iterations
            diagnostics['extinction_residual'] = solution.residual

    return ResultRow(values=values, diagnostics=diagnostics)


async def run_experiment_async(
    config: Union[ExperimentConfig, dict],
    workers: Optional[int] = None,
) -> ResultTable:
    """
    Evaluate every grid point of `config`.

    Analytic grid points and simulation replicas (all grid points pooled)
    are dispatched to the worker pool; rows come back in grid order.

    Args:
        config: Experiment config (model or dict)
        workers: Worker processes (defaults to config.workers)

    Returns:
        ResultTable with one row per grid point

    Raises:
        ConfigValidationError: If the config is invalid
    """
    config = ensure_valid_config(config)
    workers = workers or config.workers
    grid = range(len(config.sweep.values))
    logger.info(f"Experiment {config.id}: {len(grid)} grid points, mode={config.mode.value}")

    rows = await gather_in_pool(analyze_grid_point, [(config, g) for g in grid], workers)

    stats: list[Optional[OutbreakStats]] = []
    if config.mode.simulate:
        rule = ThresholdRule(config.threshold_minimum, config.threshold_fraction)
        jobs = []
        for g in grid:
            laws = laws_from_config(config, config.sweep.values[g])
            model = OutbreakModel(n=config.n, laws=laws)
            jobs.extend(replicate_jobs(model, config.replicates, rule, config.seed, g))

        records = await gather_in_pool(run_replicate, jobs, workers)
        for g, row in zip(grid, rows):
            chunk = records[g * config.replicates:(g + 1) * config.replicates]
            summary = summarize_replicates(chunk, config.n, rule)
            stats.append(summary)
            row.values["pi_hat"] = summary.pi_hat
            row.values["tau_hat"] = summary.tau_hat
            row.diagnostics['simulation'] = summary.to_dict()

    return ResultTable(
        id=config.id,
        description=config.description,
        columns=config.columns(),
        rows=list(rows),
        stats=stats,
    )


def run_experiment(
    config: Union[ExperimentConfig, dict],
    workers: Optional[int] = None,
) -> ResultTable:
    """Synchronous wrapper around run_experiment_async."""
    return asyncio.run(run_experiment_async(config, workers))


def plot_script(table: ResultTable) -> str:
    """Gnuplot script drawing every result column against the sweep column."""
    x_label = table.columns[0]
    lines = [
        f"# {table.id}: {table.description}".rstrip(": "),
        'set datafile separator ","',
        "set key autotitle columnhead",
        f'set xlabel "{x_label}"',
        "set terminal pngcairo size 800,600",
        f'set output "{table.id}.png"',
    ]
    curves = [
        f'"{table.id}.csv" using 1:{i} with linespoints title "{name}"'
        for i, name in enumerate(table.columns, start=1)
        if i > 1 and name != "cv_w"
    ]
    lines.append("plot " + ", \\\n     ".join(curves))
    return "\n".join(lines) + "\n"


def emit_outputs(table: ResultTable, path: Path, dump_replicates: bool = False) -> ResultPaths:
    """
    Write `<id>.csv`, `<id>.plot` and `<id>.diagnostics.json` under `path`.

    With `dump_replicates`, per-replicate CSVs go to
    `<id>_replicates/point_<g>.csv`.

    Raises:
        OutputError: If any file cannot be written
    """
    store = ResultStore(path)
    store.save_table(table.id, table.to_frame())
    store.save_plot(table.id, plot_script(table))
    store.save_diagnostics(table.id, {
        'id': table.id,
        'columns': list(table.columns),
        'rows': [row.diagnostics for row in table.rows],
    })

    if dump_replicates:
        for g, summary in enumerate(table.stats):
            if summary is not None:
                write_replicate_csv(
                    summary.records,
                    summary,
                    Path(path) / f"{table.id}_replicates" / f"point_{g}.csv",
                )

    paths = store.paths(table.id)
    logger.info(f"Wrote {paths.csv}, {paths.plot} and {paths.diagnostics}")
    return paths
