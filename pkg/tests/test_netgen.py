import numpy as np
import pytest

from common.errors import ConfigurationError
from distributions import (
    make_constant_degree,
    make_constant_trait,
    make_constant_weight,
    make_explicit_weight,
    make_truncated_poisson,
    make_two_point_trait,
    make_two_point_weight_kernel,
    power_law_q_low,
    size_biased,
)
from netgen import (
    NodeAttributes,
    WeightedGraph,
    build_network,
    dump_edge_list,
    endpoint_degree_histogram,
    load_edge_list,
    sample_node_attributes,
)


# ==============================================================================
# Fixtures
# ==============================================================================


@pytest.fixture
def regular_attrs():
    """1000 nodes of degree 5 with unit weights and two trait types."""
    return sample_node_attributes(
        1000,
        make_constant_degree(5),
        make_constant_weight(1),
        make_two_point_trait(0.48, 0.5, 0.48, 0.5, 1.0),
        seed=11,
    )


@pytest.fixture
def weighted_attrs():
    """Truncated Poisson degrees with weights in {1, 10} that depend on degree."""
    deg = make_truncated_poisson(4, 15)
    kernel = make_two_point_weight_kernel(
        1, 10, power_law_q_low(1.0, -1.0, -2.0), deg.positive_degrees
    )
    return sample_node_attributes(
        5000, deg, kernel, make_constant_trait(0.5, 0.5), seed=7
    )


@pytest.fixture
def small_graph():
    """Three nodes: 0-1 (w=2), 1-2 (w=1) and a self-loop on 2."""
    return WeightedGraph(
        n=3,
        edge_a=np.array([0, 1, 2]),
        edge_b=np.array([1, 2, 2]),
        edge_w=np.array([2, 1, 1]),
    )


# ==============================================================================
# Tests for WeightedGraph and NodeAttributes
# ==============================================================================


class TestWeightedGraph:
    def test_degrees_count_self_loops_twice(self, small_graph):
        assert small_graph.degrees.tolist() == [1, 2, 3]
        assert small_graph.edge_count == 3

    def test_adjacency_rows(self, small_graph):
        """Each node's CSR row lists its neighbours with the edge weight."""
        row = slice(small_graph.indptr[1], small_graph.indptr[2])
        assert sorted(small_graph.neighbors[row].tolist()) == [0, 2]
        assert sorted(small_graph.entry_weights[row].tolist()) == [1, 2]

    def test_entries_of_keeps_node_order(self, small_graph):
        entries = small_graph.entries_of(np.array([2, 0]))
        assert small_graph.entry_sources[entries].tolist() == [2, 2, 2, 0]

    def test_entries_of_empty(self):
        graph = WeightedGraph(n=2, edge_a=np.array([]), edge_b=np.array([]), edge_w=np.array([]))
        assert graph.entries_of(np.array([0, 1])).size == 0

    def test_arrays_are_read_only(self, small_graph):
        with pytest.raises(ValueError):
            small_graph.edge_a[0] = 2

    @pytest.mark.parametrize(
        'a, b, w',
        [([0], [3], [1]), ([0, 1], [1], [1, 1]), ([0], [1], [0])],
    )
    def test_invalid_edges(self, a, b, w):
        with pytest.raises(ConfigurationError):
            WeightedGraph(n=3, edge_a=np.array(a), edge_b=np.array(b), edge_w=np.array(w))


class TestNodeAttributes:
    def test_stub_count_must_match_degrees(self):
        with pytest.raises(ConfigurationError):
            NodeAttributes(
                degrees=np.array([2, 1]),
                stub_weights=np.array([1, 1]),
                x=np.array([0.5, 0.5]),
                y=np.array([0.5, 0.5]),
            )

    def test_stub_owners(self):
        attrs = NodeAttributes(
            degrees=np.array([2, 0, 1]),
            stub_weights=np.array([1, 1, 1]),
            x=np.zeros(3),
            y=np.zeros(3),
        )
        assert attrs.stub_owners.tolist() == [0, 0, 2]
        assert attrs.is_symmetric


# ==============================================================================
# Tests for sampling and matching
# ==============================================================================


class TestSampleNodeAttributes:
    def test_regular_draw(self, regular_attrs):
        assert regular_attrs.n == 1000
        assert np.all(regular_attrs.degrees == 5)
        assert regular_attrs.stub_weights.size == 5000
        assert np.all(regular_attrs.stub_weights == 1)
        assert regular_attrs.is_symmetric

    def test_trait_proportions(self, regular_attrs):
        """The two trait levels appear in roughly equal numbers."""
        high = np.mean(regular_attrs.x > 0.48)
        assert 0.4 < high < 0.6

    def test_degree_one_gets_heavy_weight(self, weighted_attrs):
        """q(1|1) = 0, so every half-edge of a degree-1 node has weight 10."""
        owners = weighted_attrs.stub_owners
        ones = weighted_attrs.degrees[owners] == 1
        assert ones.any()
        assert np.all(weighted_attrs.stub_weights[ones] == 10)

    def test_same_seed_same_draw(self):
        args = (200, make_truncated_poisson(4, 15), make_explicit_weight({1: 1, 3: 1}),
                make_constant_trait(0.5, 0.5))
        first = sample_node_attributes(*args, seed=5)
        second = sample_node_attributes(*args, seed=5)
        assert np.array_equal(first.degrees, second.degrees)
        assert np.array_equal(first.stub_weights, second.stub_weights)

    def test_missing_kernel_row(self):
        kernel = make_two_point_weight_kernel(1, 10, power_law_q_low(0.5, 0.0, -2.0), [5])
        with pytest.raises(ConfigurationError):
            sample_node_attributes(10, make_constant_degree(3), kernel, make_constant_trait(0.5, 0.5))

    def test_empty_population(self):
        with pytest.raises(ConfigurationError):
            sample_node_attributes(0, make_constant_degree(3), make_constant_weight(),
                                   make_constant_trait(0.5, 0.5))


class TestBuildNetwork:
    def test_every_half_edge_matched(self, regular_attrs):
        graph, diagnostics = build_network(regular_attrs, seed=3)
        assert graph.edge_count == 2500
        assert diagnostics.total_dropped == 0
        assert int(graph.degrees.sum()) == 5000
        assert sum(diagnostics.degree_histogram.values()) == 1000

    def test_pairs_only_equal_weights(self, weighted_attrs):
        """Each weight class contributes 2·edges + dropped half-edges."""
        graph, diagnostics = build_network(weighted_attrs, seed=3)
        for w in (1, 10):
            stubs = int(np.sum(weighted_attrs.stub_weights == w))
            edges = int(np.sum(graph.edge_w == w))
            assert 2 * edges + diagnostics.dropped_half_edges[w] == stubs

    def test_odd_class_drops_one(self):
        attrs = NodeAttributes(
            degrees=np.array([1, 1, 1]),
            stub_weights=np.array([1, 1, 1]),
            x=np.full(3, 0.5),
            y=np.full(3, 0.5),
        )
        graph, diagnostics = build_network(attrs, seed=0)
        assert graph.edge_count == 1
        assert diagnostics.dropped_half_edges == {1: 1}

    def test_self_loop_counted(self):
        attrs = NodeAttributes(
            degrees=np.array([2]), stub_weights=np.array([1, 1]),
            x=np.array([0.5]), y=np.array([0.5]),
        )
        graph, diagnostics = build_network(attrs, seed=0)
        assert diagnostics.self_loops == 1
        assert graph.degrees.tolist() == [2]

    def test_loops_and_parallel_edges(self):
        """Two degree-2 nodes end up with two loops or one doubled edge."""
        attrs = NodeAttributes(
            degrees=np.array([2, 2]), stub_weights=np.ones(4, dtype=int),
            x=np.full(2, 0.5), y=np.full(2, 0.5),
        )
        for seed in range(10):
            _, diagnostics = build_network(attrs, seed=seed)
            assert diagnostics.self_loops + 2 * diagnostics.multi_edges == 2

    def test_realized_degree_loses_only_dropped_half_edges(self, weighted_attrs):
        graph, diagnostics = build_network(weighted_attrs, seed=3)
        deficit = weighted_attrs.degrees - graph.degrees
        assert np.all((deficit == 0) | (deficit == 1))
        assert int(deficit.sum()) == diagnostics.total_dropped
        assert np.count_nonzero(deficit) <= len(diagnostics.dropped_half_edges)

    @pytest.mark.parametrize('seed', range(8))
    def test_dropped_half_edge_belongs_to_odd_class(self, seed):
        """Node 2 owns no weight-1 half-edge, so it always keeps its degree."""
        attrs = NodeAttributes(
            degrees=np.array([3, 2, 2]),
            stub_weights=np.array([1, 1, 10, 1, 10, 10, 10]),
            x=np.full(3, 0.5),
            y=np.full(3, 0.5),
        )
        graph, diagnostics = build_network(attrs, seed=seed)
        assert diagnostics.dropped_half_edges == {1: 1, 10: 0}
        deficit = attrs.degrees - graph.degrees
        assert int(deficit.sum()) == 1
        assert deficit[2] == 0

    def test_deterministic(self, weighted_attrs):
        first, _ = build_network(weighted_attrs, seed=9)
        second, _ = build_network(weighted_attrs, seed=9)
        assert np.array_equal(first.edge_a, second.edge_a)
        assert np.array_equal(first.edge_b, second.edge_b)
        assert np.array_equal(first.edge_w, second.edge_w)

    def test_diagnostics_to_dict(self, regular_attrs):
        _, diagnostics = build_network(regular_attrs, seed=1)
        data = diagnostics.to_dict()
        assert data['dropped_half_edges'] == {'1': 0}
        assert set(data) == {'dropped_half_edges', 'self_loops', 'multi_edges', 'degree_histogram'}

    def test_endpoint_degrees_are_size_biased(self):
        """Degrees seen at edge ends follow d·p(d)/mean."""
        deg = make_truncated_poisson(4, 15)
        attrs = sample_node_attributes(
            20000, deg, make_constant_weight(1), make_constant_trait(0.5, 0.5), seed=21
        )
        graph, _ = build_network(attrs, seed=22)
        empirical = endpoint_degree_histogram(graph, attrs)
        expected = size_biased(deg)
        for d in range(1, 10):
            assert empirical.prob(d) == pytest.approx(expected.prob(d), abs=0.015)


# ==============================================================================
# Tests for large-sample properties of the construction
# ==============================================================================


class TestLargeNetworks:
    @pytest.mark.parametrize('n', [1000, 10_000])
    def test_loops_and_multi_edges_stay_rare(self, n):
        """Loops stay O(1) while the parallel-edge fraction shrinks with n."""
        attrs = sample_node_attributes(
            n, make_constant_degree(5), make_constant_weight(1), make_constant_trait(0.5, 0.5), seed=31
        )
        graph, diagnostics = build_network(attrs, seed=32)
        assert diagnostics.self_loops <= 15
        assert diagnostics.multi_edges <= 25
        if n == 10_000:
            assert diagnostics.multi_edges / graph.edge_count < 1e-3

    def test_trait_correlation(self):
        attrs = sample_node_attributes(
            20_000,
            make_constant_degree(5),
            make_constant_weight(1),
            make_two_point_trait(0.5, 0.3, 0.5, 0.3, 0.8),
            seed=41,
        )
        assert np.corrcoef(attrs.x, attrs.y)[0, 1] == pytest.approx(0.8, abs=0.02)

    @pytest.mark.slow
    def test_degree_histogram_within_three_sigma(self):
        n = 100_000
        deg = make_truncated_poisson(4, 15)
        attrs = sample_node_attributes(
            n, deg, make_constant_weight(1), make_constant_trait(0.5, 0.5), seed=51
        )
        counts = np.bincount(attrs.degrees, minlength=16)
        assert counts.size == 16
        for d in deg.values:
            p = deg.prob(d)
            if n * p < 100:
                continue
            assert abs(counts[d] - n * p) <= 3 * np.sqrt(n * p * (1 - p)) + 1


# ==============================================================================
# Tests for the edge list format
# ==============================================================================


class TestEdgeList:
    def test_dump_and_load(self, tmp_path, small_graph):
        path = dump_edge_list(small_graph, tmp_path / "graph.txt")
        assert path.read_text().splitlines()[0] == "# n=3"
        loaded = load_edge_list(path)
        assert loaded.n == 3
        assert list(loaded.edges()) == list(small_graph.edges())

    def test_missing_header(self, tmp_path):
        path = tmp_path / "graph.txt"
        path.write_text("0 1 1\n")
        with pytest.raises(ConfigurationError):
            load_edge_list(path)

    def test_malformed_line(self, tmp_path):
        path = tmp_path / "graph.txt"
        path.write_text("# n=2\n0 1\n")
        with pytest.raises(ConfigurationError, match=":2:"):
            load_edge_list(path)
