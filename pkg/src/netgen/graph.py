"""Weighted multigraph, node attributes and build diagnostics."""

from dataclasses import dataclass, field

import numpy as np

from common.errors import ConfigurationError


def _frozen(array, dtype) -> np.ndarray:
    out = np.array(array, dtype=dtype, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class NodeAttributes:
    """
    Per-node draws that precede edge formation.

    Half-edges are stored flat and grouped by owner: node i owns the
    `degrees[i]` consecutive entries starting at `stub_offsets[i]`.
    """

    degrees: np.ndarray
    """Sampled degree D_i"""

    stub_weights: np.ndarray
    """Weight of every half-edge, grouped by owner"""

    x: np.ndarray
    """Susceptibility X_i"""

    y: np.ndarray
    """Infectivity Y_i"""

    def __post_init__(self):
        object.__setattr__(self, "degrees", _frozen(self.degrees, np.int64))
        object.__setattr__(self, "stub_weights", _frozen(self.stub_weights, np.int64))
        object.__setattr__(self, "x", _frozen(self.x, float))
        object.__setattr__(self, "y", _frozen(self.y, float))

        n = self.degrees.size
        if self.x.size != n or self.y.size != n:
            raise ConfigurationError("degree and trait arrays must have one entry per node")
        if np.any(self.degrees < 0):
            raise ConfigurationError("degrees must be non-negative")
        if self.stub_weights.size != int(self.degrees.sum()):
            raise ConfigurationError(
                f"{self.stub_weights.size} half-edge weights for {int(self.degrees.sum())} half-edges"
            )
        if np.any(self.stub_weights < 1):
            raise ConfigurationError("half-edge weights must be >= 1")

    @property
    def n(self) -> int:
        return int(self.degrees.size)

    @property
    def stub_owners(self) -> np.ndarray:
        """Node id of every half-edge."""
        return np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)

    @property
    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.x, self.y))


@dataclass(frozen=True, eq=False)
class WeightedGraph:
    """
    Undirected multigraph with integer edge weights.

    Edges are kept as parallel arrays (`edge_a`, `edge_b`, `edge_w`). The
    adjacency is stored in CSR form with one entry per edge endpoint, so a
    self-loop appears twice in its node's row and counts 2 towards degree.
    """

    n: int
    edge_a: np.ndarray
    edge_b: np.ndarray
    edge_w: np.ndarray
    indptr: np.ndarray = field(init=False)
    neighbors: np.ndarray = field(init=False)
    entry_weights: np.ndarray = field(init=False)
    entry_edges: np.ndarray = field(init=False)

    def __post_init__(self):
        a = _frozen(self.edge_a, np.int64)
        b = _frozen(self.edge_b, np.int64)
        w = _frozen(self.edge_w, np.int64)
        if not (a.size == b.size == w.size):
            raise ConfigurationError("edge arrays must have equal length")
        if a.size and (min(a.min(), b.min()) < 0 or max(a.max(), b.max()) >= self.n):
            raise ConfigurationError(f"edge endpoints must lie in [0, {self.n})")
        if w.size and w.min() < 1:
            raise ConfigurationError("edge weights must be >= 1")

        heads = np.concatenate([a, b])
        tails = np.concatenate([b, a])
        weights = np.concatenate([w, w])
        edge_ids = np.concatenate([np.arange(a.size), np.arange(a.size)])
        order = np.argsort(heads, kind="stable")
        counts = np.bincount(heads, minlength=self.n)

        object.__setattr__(self, "edge_a", a)
        object.__setattr__(self, "edge_b", b)
        object.__setattr__(self, "edge_w", w)
        object.__setattr__(self, "indptr", _frozen(np.concatenate([[0], np.cumsum(counts)]), np.int64))
        object.__setattr__(self, "neighbors", _frozen(tails[order], np.int64))
        object.__setattr__(self, "entry_weights", _frozen(weights[order], np.int64))
        object.__setattr__(self, "entry_edges", _frozen(edge_ids[order], np.int64))

    @property
    def edge_count(self) -> int:
        return int(self.edge_a.size)

    @property
    def degrees(self) -> np.ndarray:
        """Realised degree of every node (self-loops count twice)."""
        return np.diff(self.indptr)

    @property
    def entry_sources(self) -> np.ndarray:
        """Owning node of every adjacency entry."""
        return np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)

    def entries_of(self, nodes: np.ndarray) -> np.ndarray:
        """Adjacency entry indices of `nodes`, concatenated in node order."""
        nodes = np.asarray(nodes, dtype=np.int64)
        starts = self.indptr[nodes]
        lengths = self.indptr[nodes + 1] - starts
        total = int(lengths.sum())
        if total == 0:
            return np.empty(0, dtype=np.int64)
        # Offset of each slice start inside the concatenated output
        shift = np.repeat(starts - np.cumsum(lengths) + lengths, lengths)
        return shift + np.arange(total, dtype=np.int64)

    def edges(self):
        """Iterate over (a, b, w) triples."""
        return zip(self.edge_a.tolist(), self.edge_b.tolist(), self.edge_w.tolist())


@dataclass
class BuildDiagnostics:
    """What the half-edge matching did to the sampled degrees."""

    dropped_half_edges: dict[int, int] = field(default_factory=dict)
    """Weight class -> half-edges discarded (0 or 1)"""

    self_loops: int = 0

    multi_edges: int = 0
    """Edges beyond the first between the same unordered pair"""

    degree_histogram: dict[int, int] = field(default_factory=dict)
    """Realised degree -> node count"""

    @property
    def total_dropped(self) -> int:
        return sum(self.dropped_half_edges.values())

    def to_dict(self) -> dict:
        """Convert diagnostics to a JSON-compatible dictionary."""
        return {
            'dropped_half_edges': {str(w): c for w, c in self.dropped_half_edges.items()},
            'self_loops': self.self_loops,
            'multi_edges': self.multi_edges,
            'degree_histogram': {str(d): c for d, c in self.degree_histogram.items()},
        }
