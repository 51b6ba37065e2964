"""Bond percolation for reciprocal transmission."""

import logging

import numpy as np

from common.errors import ContractViolationError
from common.rng import SeedLike, make_rng
from netgen.graph import NodeAttributes, WeightedGraph

from .transmission import transmission_prob

logger = logging.getLogger(__name__)


class UnionFind:
    """
    Disjoint sets over 0..n-1 with union by size and path halving.
    """

    def __init__(self, n: int):
        self.parent = np.arange(n, dtype=np.int64)
        self.size = np.ones(n, dtype=np.int64)

    def find(self, item: int) -> int:
        parent = self.parent
        while parent[item] != item:
            parent[item] = parent[parent[item]]
            item = parent[item]
        return int(item)

    def union(self, a: int, b: int) -> int:
        """Merge the sets of a and b; return the surviving root."""
        root_a, root_b = self.find(a), self.find(b)
        if root_a == root_b:
            return root_a
        if self.size[root_a] < self.size[root_b]:
            root_a, root_b = root_b, root_a
        self.parent[root_b] = root_a
        self.size[root_a] += self.size[root_b]
        return root_a

    def component_sizes(self) -> np.ndarray:
        """Sizes of all sets, largest first."""
        roots = self.parent.copy()
        while True:
            jumped = roots[roots]
            if np.array_equal(jumped, roots):
                break
            roots = jumped
        counts = np.bincount(roots, minlength=roots.size)
        return np.sort(counts[counts > 0])[::-1]


def percolate_symmetric(
    graph: WeightedGraph,
    attrs: NodeAttributes,
    seed: SeedLike = None,
) -> np.ndarray:
    """
    Keep each edge (a, b, w) with probability t(w, X_a, X_b) and return the
    connected-component sizes of the kept subgraph, largest first.

    Requires X = Y at every node, so that transmission along an edge is
    equally likely in both directions.

    Raises:
        ContractViolationError: If some node has X != Y
    """
    if not attrs.is_symmetric:
        raise ContractViolationError("percolation needs X == Y at every node")

    rng = make_rng(seed)
    keep_prob = transmission_prob(graph.edge_w, attrs.x[graph.edge_a], attrs.x[graph.edge_b])
    kept = rng.random(graph.edge_count) < keep_prob

    components = UnionFind(graph.n)
    for a, b in zip(graph.edge_a[kept].tolist(), graph.edge_b[kept].tolist()):
        components.union(a, b)

    sizes = components.component_sizes()
    logger.debug(
        f"Kept {int(kept.sum())}/{graph.edge_count} edges; largest component {sizes[0] if sizes.size else 0}"
    )
    return sizes


def giant_fraction(sizes: np.ndarray, n: int) -> float:
    """Relative size of the largest component."""
    return float(np.max(sizes)) / n if len(sizes) else 0.0


def node_component_fraction(sizes: np.ndarray, n: int) -> float:
    """Mean relative size of the component containing a uniformly chosen node."""
    sizes = np.asarray(sizes, dtype=float)
    return float(np.sum(sizes ** 2)) / float(n) ** 2
