"""Linear-time spanning trees with ``deg_T(v) <= ceil(deg_G(v)/2) + 1`` for
2-edge-connected graphs, with verification and brute-force oracles."""

from .builder import (
    BuilderTrace,
    BuildError,
    SpanningTree,
    build_spanning_tree,
    format_tree,
    low_degree_spanning_tree,
    parse_tree,
)
from .edge_dfs import (
    EdgeDfsList,
    TraversalItem,
    classify_steps,
    compute_edge_dfs,
    validate_edge_dfs,
)
from .generators import GenSpec, gen_family, gen_random_2ec
from .graph import Graph, degree_ceiling_bound, parse_graph, serialize_graph
from .verify import (
    DegreeReport,
    NotTwoEdgeConnected,
    OrientationStats,
    check_degree_bound,
    check_partition_cut,
    find_bridges,
    is_two_edge_connected,
    orientation_stats,
    validate_spanning_tree,
)

__all__ = [
    "BuildError", "BuilderTrace", "DegreeReport", "EdgeDfsList", "GenSpec", "Graph",
    "NotTwoEdgeConnected", "OrientationStats", "SpanningTree", "TraversalItem",
    "build_spanning_tree", "check_degree_bound", "check_partition_cut", "classify_steps",
    "compute_edge_dfs", "degree_ceiling_bound", "find_bridges", "format_tree", "gen_family",
    "gen_random_2ec", "is_two_edge_connected", "low_degree_spanning_tree", "orientation_stats",
    "parse_graph", "parse_tree", "serialize_graph", "validate_edge_dfs", "validate_spanning_tree",
]
