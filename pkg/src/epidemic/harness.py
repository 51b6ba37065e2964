"""Monte Carlo harness: independent replicas of graph, attributes and outbreak."""

import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np
import pandas as pd

from common.errors import ConfigurationError, OutputError
from common.rng import make_rng, replicate_seed, split_seed
from common.worker_pool import gather_in_pool, run_in_pool
from distributions.spec import ModelLaws
from netgen.builder import build_network, sample_node_attributes

from .outbreak import simulate_outbreak

logger = logging.getLogger(__name__)

# Two-sided 95% normal quantile
Z_95 = 1.96

REPLICATE_COLUMNS = ("replicate", "n", "final_size", "generations", "major")


@dataclass(frozen=True)
class OutbreakModel:
    """Population size plus the laws a replica is drawn from."""

    n: int
    laws: ModelLaws

    def __post_init__(self):
        if self.n < 1:
            raise ConfigurationError(f"n must be >= 1, got {self.n}")


@dataclass(frozen=True)
class ThresholdRule:
    """A replicate is a major outbreak iff final size >= max(minimum, fraction·n)."""

    minimum: int = 50
    fraction: float = 0.01

    def __call__(self, n: int) -> float:
        return max(float(self.minimum), self.fraction * n)

    def scaled(self, factor: float) -> "ThresholdRule":
        return ThresholdRule(minimum=self.minimum * factor, fraction=self.fraction * factor)


@dataclass(frozen=True)
class ReplicateRecord:
    replicate: int
    n: int
    final_size: int
    generations: int
    major: bool


@dataclass
class OutbreakStats:
    """
    Summary of a batch of replicas.

    Half-widths are 95% normal-approximation intervals. `tau_hat` and its
    half-width are None when no replicate was major.
    """

    replicates: int
    n: int
    threshold: float
    majors: int
    pi_hat: float
    pi_half_width: float
    tau_hat: Optional[float]
    tau_half_width: Optional[float]
    threshold_sensitivity: dict[str, float] = field(default_factory=dict)
    """pi_hat recomputed at 0.5x and 2x the threshold"""

    records: tuple[ReplicateRecord, ...] = field(default=(), repr=False)

    def to_dict(self) -> dict:
        """Convert stats to a JSON-compatible dictionary (records excluded)."""
        return {
            'replicates': self.replicates,
            'n': self.n,
            'threshold': self.threshold,
            'majors': self.majors,
            'pi_hat': self.pi_hat,
            'pi_half_width': self.pi_half_width,
            'tau_hat': self.tau_hat,
            'tau_half_width': self.tau_half_width,
            'threshold_sensitivity': dict(self.threshold_sensitivity),
        }


def run_replicate(
    model: OutbreakModel,
    seed: np.random.SeedSequence,
    replicate: int,
    threshold: float,
) -> ReplicateRecord:
    """Draw attributes, build a graph and run one outbreak from a uniform index case."""
    attr_seed, graph_seed, outbreak_seed = split_seed(seed, 3)
    laws = model.laws
    attrs = sample_node_attributes(model.n, laws.degree, laws.kernel, laws.traits, attr_seed)
    graph, _ = build_network(attrs, graph_seed)
    result = simulate_outbreak(graph, attrs, "uniform", make_rng(outbreak_seed))
    return ReplicateRecord(
        replicate=replicate,
        n=model.n,
        final_size=result.final_size,
        generations=result.generations,
        major=result.final_size >= threshold,
    )


def replicate_jobs(
    model: OutbreakModel,
    replicates: int,
    threshold_rule: ThresholdRule,
    seed: int,
    grid_index: int = 0,
) -> list[tuple]:
    """
    Argument tuples for run_replicate.

    Replica i at grid point g uses the stream keyed by (seed, g, i), so
    results do not depend on worker count or completion order.
    """
    if replicates < 1:
        raise ConfigurationError(f"replicates must be >= 1, got {replicates}")
    threshold = threshold_rule(model.n)
    return [
        (model, replicate_seed(seed, grid_index, i), i, threshold)
        for i in range(replicates)
    ]


def _pi(final_sizes: np.ndarray, threshold: float) -> float:
    return float(np.mean(final_sizes >= threshold))


def summarize_replicates(
    records: Sequence[ReplicateRecord],
    n: int,
    threshold_rule: ThresholdRule,
) -> OutbreakStats:
    """Reduce replicate records to pi_hat, tau_hat and threshold sensitivity."""
    threshold = threshold_rule(n)
    sizes = np.array([r.final_size for r in records], dtype=float)
    count = sizes.size
    major = sizes >= threshold
    majors = int(major.sum())

    pi_hat = majors / count
    pi_half = Z_95 * math.sqrt(pi_hat * (1.0 - pi_hat) / count)

    tau_hat = tau_half = None
    if majors:
        relative = sizes[major] / n
        tau_hat = float(relative.mean())
        tau_half = float(Z_95 * relative.std(ddof=1) / math.sqrt(majors)) if majors > 1 else 0.0

    sensitivity = {
        f"{factor:g}x": _pi(sizes, threshold_rule.scaled(factor)(n))
        for factor in (0.5, 2.0)
    }
    if max(abs(v - pi_hat) for v in sensitivity.values()) > 2 * pi_half + 1e-12:
        logger.warning(
            f"pi_hat={pi_hat:.4f} is threshold-sensitive at n={n}: {sensitivity}"
        )

    return OutbreakStats(
        replicates=count,
        n=n,
        threshold=threshold,
        majors=majors,
        pi_hat=pi_hat,
        pi_half_width=pi_half,
        tau_hat=tau_hat,
        tau_half_width=tau_half,
        threshold_sensitivity=sensitivity,
        records=tuple(records),
    )


async def estimate_outbreak_stats_async(
    model: OutbreakModel,
    replicates: int,
    threshold_rule: ThresholdRule = ThresholdRule(),
    seed: int = 0,
    workers: int = 1,
    grid_index: int = 0,
) -> OutbreakStats:
    """
    Run `replicates` independent replicas and summarise them.

    Args:
        model: Population size and laws
        replicates: Number of replicas (>= 1)
        threshold_rule: Major-outbreak classification
        seed: Master seed
        workers: Worker processes (1 = inline)
        grid_index: Grid point index mixed into every replica stream

    Returns:
        OutbreakStats with the per-replicate records attached
    """
    jobs = replicate_jobs(model, replicates, threshold_rule, seed, grid_index)
    records = await gather_in_pool(run_replicate, jobs, workers)
    stats = summarize_replicates(records, model.n, threshold_rule)
    logger.info(
        f"n={model.n}, {replicates} replicas: pi_hat={stats.pi_hat:.4f}, tau_hat={stats.tau_hat}"
    )
    return stats


def estimate_outbreak_stats(
    model: OutbreakModel,
    replicates: int,
    threshold_rule: ThresholdRule = ThresholdRule(),
    seed: int = 0,
    workers: int = 1,
    grid_index: int = 0,
) -> OutbreakStats:
    """Synchronous wrapper around estimate_outbreak_stats_async."""
    jobs = replicate_jobs(model, replicates, threshold_rule, seed, grid_index)
    records = run_in_pool(run_replicate, jobs, workers)
    return summarize_replicates(records, model.n, threshold_rule)


def write_replicate_csv(
    records: Sequence[ReplicateRecord],
    stats: OutbreakStats,
    path: Path,
) -> Path:
    """
    Write one row per replicate plus a summary row
    `summary,<n>,<mean final size>,<mean generations>,<pi_hat>`.

    Raises:
        OutputError: If the file cannot be written
    """
    path = Path(path)
    frame = pd.DataFrame(
        [
            {
                'replicate': r.replicate,
                'n': r.n,
                'final_size': r.final_size,
                'generations': r.generations,
                'major': int(r.major),
            }
            for r in records
        ],
        columns=list(REPLICATE_COLUMNS),
    ).astype(object)

    summary = {
        'replicate': 'summary',
        'n': stats.n,
        'final_size': f"{np.mean([r.final_size for r in records]):.12g}",
        'generations': f"{np.mean([r.generations for r in records]):.12g}",
        'major': f"{stats.pi_hat:.12g}",
    }
    frame = pd.concat([frame, pd.DataFrame([summary], columns=list(REPLICATE_COLUMNS))], ignore_index=True)

    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(path, index=False, lineterminator="\n")
    except OSError as e:
        raise OutputError(f"Failed to write replicate CSV {path}: {e}") from e
    return path
