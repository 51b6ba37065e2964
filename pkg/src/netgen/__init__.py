"""Weighted configuration-model networks."""

from .builder import build_network, endpoint_degree_histogram, sample_node_attributes
from .edge_list import dump_edge_list, load_edge_list
from .graph import BuildDiagnostics, NodeAttributes, WeightedGraph

__all__ = [
    "BuildDiagnostics",
    "NodeAttributes",
    "WeightedGraph",
    "build_network",
    "dump_edge_list",
    "endpoint_degree_histogram",
    "load_edge_list",
    "sample_node_attributes",
]
