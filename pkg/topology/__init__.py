"""Graph core: representation, named generators, edge-list persistence and metrics."""

from .edgelist import load_graph, read_graph_file, save_graph
from .generators import hypercube, named_graph, parse_graph_name, path_graph
from .graph import Graph, bfs_distance_matrix, bfs_distances, summarize_distances
from .metrics import (
    Bisection,
    BisectionMode,
    Exactness,
    GraphMetrics,
    bisection_width,
    diameter,
    graph_metrics,
    is_regular,
    mean_path_length,
    metrics_table,
    total_distance,
)

__all__ = [
    "Bisection",
    "BisectionMode",
    "Exactness",
    "Graph",
    "GraphMetrics",
    "bfs_distance_matrix",
    "bfs_distances",
    "bisection_width",
    "diameter",
    "graph_metrics",
    "hypercube",
    "is_regular",
    "load_graph",
    "mean_path_length",
    "metrics_table",
    "named_graph",
    "parse_graph_name",
    "path_graph",
    "read_graph_file",
    "save_graph",
    "summarize_distances",
    "total_distance",
]
