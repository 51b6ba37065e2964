"""SIR outbreaks, reciprocal-transmission percolation and the replicate harness."""

from .harness import (
    OutbreakModel,
    OutbreakStats,
    ReplicateRecord,
    ThresholdRule,
    estimate_outbreak_stats,
    estimate_outbreak_stats_async,
    replicate_jobs,
    run_replicate,
    summarize_replicates,
    write_replicate_csv,
)
from .outbreak import EpidemicResult, mean_offspring, open_entries, simulate_outbreak
from .percolation import UnionFind, giant_fraction, node_component_fraction, percolate_symmetric
from .transmission import transmission_prob

__all__ = [
    "EpidemicResult",
    "OutbreakModel",
    "OutbreakStats",
    "ReplicateRecord",
    "ThresholdRule",
    "UnionFind",
    "estimate_outbreak_stats",
    "estimate_outbreak_stats_async",
    "giant_fraction",
    "mean_offspring",
    "node_component_fraction",
    "open_entries",
    "percolate_symmetric",
    "replicate_jobs",
    "run_replicate",
    "simulate_outbreak",
    "summarize_replicates",
    "transmission_prob",
    "write_replicate_csv",
]
