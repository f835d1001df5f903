"""Jordan center and distance-to-center layering of undirected graphs."""
from .baseline import bfs_eccentricities, floyd_warshall, oracle_partition
from .bitmatrix import BoolSymMatrix, from_graph, has_full_row, multiply, multiply_tracking
from .graph import (
    Graph,
    GraphError,
    Morphology,
    ParseError,
    check_connected,
    export_dot,
    generate_morphology,
    parse_edge_list,
    serialize_edge_list,
)
from .partition import PartitionResult, assemble_below_radius, doubling_powers, partition

__all__ = [
    "BoolSymMatrix", "Graph", "GraphError", "Morphology", "ParseError", "PartitionResult",
    "assemble_below_radius", "bfs_eccentricities", "check_connected", "doubling_powers",
    "export_dot", "floyd_warshall", "from_graph", "generate_morphology", "has_full_row",
    "multiply", "multiply_tracking", "oracle_partition", "parse_edge_list", "partition",
    "serialize_edge_list",
]
