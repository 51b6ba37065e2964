"""Weighted configuration model: node draws and half-edge matching."""

import logging

import numpy as np

from common.errors import ConfigurationError
from common.rng import SeedLike, make_rng, split_seed
from distributions.models import DegreeDistribution, TraitDistribution, WeightKernel

from .graph import BuildDiagnostics, NodeAttributes, WeightedGraph

logger = logging.getLogger(__name__)


def sample_node_attributes(
    n: int,
    deg: DegreeDistribution,
    kernel: WeightKernel,
    traits: TraitDistribution,
    seed: SeedLike = None,
) -> NodeAttributes:
    """
    Draw degrees, half-edge weights and traits for `n` nodes.

    Degrees are iid from `deg`; the half-edges of a degree-d node get iid
    weights from `kernel.row(d)`; traits are iid from `traits` and
    independent of everything else. The three draws use separate streams
    split from `seed`.

    Args:
        n: Number of nodes (>= 1)
        deg: Degree law
        kernel: Weight law given degree
        traits: Joint (X, Y) law
        seed: Seed, SeedSequence or Generator

    Returns:
        NodeAttributes

    Raises:
        ConfigurationError: If n < 1 or the kernel has no row for a sampled degree
    """
    if n < 1:
        raise ConfigurationError(f"n must be >= 1, got {n}")

    degree_seed, weight_seed, trait_seed = split_seed(seed, 3)
    degree_rng = make_rng(degree_seed)
    weight_rng = make_rng(weight_seed)
    trait_rng = make_rng(trait_seed)

    degrees = degree_rng.choice(deg.value_array, size=n, p=deg.prob_array)

    owner_degree = np.repeat(degrees, degrees)
    stub_weights = np.empty(owner_degree.size, dtype=np.int64)
    for d in np.unique(owner_degree):
        row = kernel.row(int(d))
        mask = owner_degree == d
        stub_weights[mask] = weight_rng.choice(
            row.value_array, size=int(mask.sum()), p=row.prob_array
        )

    atom = trait_rng.choice(len(traits.atoms), size=n, p=traits.prob_array)
    return NodeAttributes(
        degrees=degrees,
        stub_weights=stub_weights,
        x=traits.x_array[atom],
        y=traits.y_array[atom],
    )


def build_network(
    attrs: NodeAttributes,
    seed: SeedLike = None,
) -> tuple[WeightedGraph, BuildDiagnostics]:
    """
    Pair half-edges uniformly at random within each weight class.

    Each class is shuffled and paired sequentially, which is a uniform
    perfect matching. A class of odd size first loses one uniformly chosen
    half-edge. Self-loops and parallel edges are kept and counted.

    Args:
        attrs: Node draws from sample_node_attributes
        seed: Seed, SeedSequence or Generator for the matching

    Returns:
        (graph, diagnostics)
    """
    rng = make_rng(seed)
    owners = attrs.stub_owners
    diagnostics = BuildDiagnostics()

    ends_a, ends_b, ends_w = [], [], []
    for w in np.unique(attrs.stub_weights):
        stubs = rng.permutation(np.flatnonzero(attrs.stub_weights == w))
        dropped = stubs.size % 2
        if dropped:
            stubs = stubs[:-1]
        diagnostics.dropped_half_edges[int(w)] = int(dropped)
        ends_a.append(owners[stubs[0::2]])
        ends_b.append(owners[stubs[1::2]])
        ends_w.append(np.full(stubs.size // 2, w, dtype=np.int64))

    empty = [np.empty(0, dtype=np.int64)]
    graph = WeightedGraph(
        n=attrs.n,
        edge_a=np.concatenate(ends_a or empty),
        edge_b=np.concatenate(ends_b or empty),
        edge_w=np.concatenate(ends_w or empty),
    )

    diagnostics.self_loops = int(np.count_nonzero(graph.edge_a == graph.edge_b))
    diagnostics.multi_edges = _count_multi_edges(graph)
    realised, counts = np.unique(graph.degrees, return_counts=True)
    diagnostics.degree_histogram = {int(d): int(c) for d, c in zip(realised, counts)}

    if diagnostics.total_dropped:
        logger.debug(
            f"Dropped {diagnostics.total_dropped} half-edge(s) from odd weight classes"
        )
    if diagnostics.self_loops:
        logger.debug(f"Matching produced {diagnostics.self_loops} self-loop(s)")
    logger.debug(
        f"Built graph: n={graph.n}, edges={graph.edge_count}, "
        f"multi-edges={diagnostics.multi_edges}"
    )
    return graph, diagnostics


def _count_multi_edges(graph: WeightedGraph) -> int:
    if graph.edge_count == 0:
        return 0
    lo = np.minimum(graph.edge_a, graph.edge_b)
    hi = np.maximum(graph.edge_a, graph.edge_b)
    _, counts = np.unique(lo * graph.n + hi, return_counts=True)
    return int((counts - 1).sum())


def endpoint_degree_histogram(graph: WeightedGraph, attrs: NodeAttributes) -> DegreeDistribution:
    """
    Empirical law of the sampled degree found at a uniformly chosen edge end.

    For large n this approaches the size-biased law d·p_D(d)/μ_D.

    Raises:
        ConfigurationError: If the graph has no edges
    """
    if graph.edge_count == 0:
        raise ConfigurationError("graph has no edges")
    ends = np.concatenate([graph.edge_a, graph.edge_b])
    values, counts = np.unique(attrs.degrees[ends], return_counts=True)
    return DegreeDistribution.from_mapping(
        {int(d): float(c) for d, c in zip(values, counts)}
    )
