"""Generation-synchronous SIR outbreak on a weighted graph."""

import logging
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from common.errors import ConfigurationError, DomainError
from common.rng import SeedLike, make_rng
from netgen.graph import NodeAttributes, WeightedGraph

from .transmission import transmission_prob

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class EpidemicResult:
    """Outcome of one outbreak started by a single index case."""

    index_case: int
    infected: np.ndarray
    """Sorted ids of every node ever infected (index case included)"""

    generation_sizes: tuple[int, ...]
    """New infections per generation; generation 0 is the index case"""

    @property
    def final_size(self) -> int:
        return int(self.infected.size)

    @property
    def generations(self) -> int:
        """Number of generations after the index case that produced infections."""
        return len(self.generation_sizes) - 1


def open_entries(graph: WeightedGraph, attrs: NodeAttributes, uniforms: np.ndarray) -> np.ndarray:
    """
    Adjacency entries along which transmission would succeed.

    Entry e from node i to node j is open when uniforms[e] < t(w, Y_i, X_j).
    Self-loop entries are never open.
    """
    sources = graph.entry_sources
    targets = graph.neighbors
    prob = transmission_prob(graph.entry_weights, attrs.y[sources], attrs.x[targets])
    return (uniforms < prob) & (sources != targets)


def simulate_outbreak(
    graph: WeightedGraph,
    attrs: NodeAttributes,
    index_case: Union[int, str] = "uniform",
    seed: SeedLike = None,
) -> EpidemicResult:
    """
    Run one SIR outbreak to extinction.

    Every infected node makes one independent attempt along each incident
    edge whose other end is still susceptible, then becomes immune. Parallel
    edges give separate attempts; a node hit by several infectors in the same
    generation is infected if any attempt succeeds.

    One uniform is drawn per adjacency entry up front, so under a fixed seed
    raising any X or Y can only enlarge the infected set.

    Args:
        graph: Network
        attrs: Node attributes the graph was built from
        index_case: Node id, or "uniform" to pick one at random
        seed: Seed, SeedSequence or Generator

    Returns:
        EpidemicResult

    Raises:
        ConfigurationError: If graph and attrs disagree on n or the index is out of range
    """
    if graph.n != attrs.n:
        raise ConfigurationError(f"graph has {graph.n} nodes but attributes have {attrs.n}")

    rng = make_rng(seed)
    if index_case == "uniform":
        index = int(rng.integers(graph.n))
    else:
        index = int(index_case)
        if not 0 <= index < graph.n:
            raise ConfigurationError(f"index case {index} outside [0, {graph.n})")

    is_open = open_entries(graph, attrs, rng.random(graph.neighbors.size))

    infected = np.zeros(graph.n, dtype=bool)
    infected[index] = True
    frontier = np.array([index], dtype=np.int64)
    sizes = [1]

    while True:
        entries = graph.entries_of(frontier)
        hits = graph.neighbors[entries[is_open[entries]]]
        fresh = np.unique(hits[~infected[hits]])
        if fresh.size == 0:
            break
        infected[fresh] = True
        sizes.append(int(fresh.size))
        frontier = fresh

    logger.debug(f"Outbreak from node {index}: {int(infected.sum())} infected over {len(sizes) - 1} generations")
    return EpidemicResult(
        index_case=index,
        infected=np.flatnonzero(infected),
        generation_sizes=tuple(sizes),
    )


def mean_offspring(results: Iterable[EpidemicResult], generation: int) -> tuple[float, float]:
    """
    Pooled growth factor from `generation` to the next.

    Returns Σ sizes[g+1] / Σ sizes[g] over all results (a missing generation
    counts as 0) and the standard error of this ratio estimator.

    Raises:
        DomainError: If no result reaches `generation`
    """
    if generation < 0:
        raise DomainError(f"generation must be >= 0, got {generation}")

    def size_at(result: EpidemicResult, g: int) -> int:
        return result.generation_sizes[g] if g < len(result.generation_sizes) else 0

    results = list(results)
    parents = np.array([size_at(r, generation) for r in results], dtype=float)
    children = np.array([size_at(r, generation + 1) for r in results], dtype=float)
    if parents.sum() == 0:
        raise DomainError(f"no outbreak reached generation {generation}")

    ratio = float(children.sum() / parents.sum())
    k = parents.size
    if k < 2:
        return ratio, float("nan")
    residual = children - ratio * parents
    se = np.sqrt(np.sum(residual ** 2) / (k - 1) / k) / parents.mean()
    return ratio, float(se)
