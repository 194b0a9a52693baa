"""Throughput and all-to-all time proxies derived from link loads.

These are trend indicators for comparing routings on the same graph, not
absolute performance predictions.
"""

from collections.abc import Sequence
from typing import NamedTuple

import pandas as pd

from routing import RoutingTable
from topology import Graph
from validation import AlltoallCurveSchema, validate_dataframe

from .traffic import TrafficSpec, link_load_counts, node_load_counts


class Throughput(NamedTuple):
    per_node: float
    capacity_bound: bool  # no node forwards traffic; links to every peer are direct


def saturation_throughput(
    table: RoutingTable, graph: Graph, spec: TrafficSpec | None = None, threads: int = 1
) -> Throughput:
    """Per-node injection rate at which the busiest directed link saturates.

    capacity * (N - 1) * flow / max_link_load, where each of a node's N - 1
    demands injects `flow`.
    """
    spec = spec or TrafficSpec()
    links = link_load_counts(table, graph, threads)
    forwarding = node_load_counts(table, graph, threads)
    busiest = int(links.max()) if links.size else 0
    if busiest == 0:
        return Throughput(per_node=0.0, capacity_bound=True)
    per_node = spec.link_capacity * (table.n - 1) / busiest
    return Throughput(per_node=per_node, capacity_bound=int(forwarding.max()) == 0)


def _alltoall_terms(table: RoutingTable, graph: Graph, threads: int) -> tuple[int, int]:
    """(busiest directed link count, longest path in hops)."""
    links = link_load_counts(table, graph, threads)
    busiest = int(links.max()) if links.size else 0
    longest = max((len(p) - 1 for p in table.paths), default=0)
    return busiest, longest


def alltoall_estimate(
    table: RoutingTable, graph: Graph, message_size: float, spec: TrafficSpec | None = None, threads: int = 1
) -> float:
    """T = max_link_load * message_size / capacity + longest_path * per_hop_latency."""
    if message_size < 0:
        raise ValueError(f"message size must be non-negative, got {message_size}")
    spec = spec or TrafficSpec()
    busiest, longest = _alltoall_terms(table, graph, threads)
    return busiest * message_size / spec.link_capacity + longest * spec.per_hop_latency


def alltoall_curve(
    table: RoutingTable,
    graph: Graph,
    message_sizes: Sequence[float],
    spec: TrafficSpec | None = None,
    threads: int = 1,
) -> pd.DataFrame:
    """alltoall_estimate swept over message sizes."""
    spec = spec or TrafficSpec()
    busiest, longest = _alltoall_terms(table, graph, threads)
    rows = [
        {
            "message_size": float(size),
            "estimate": busiest * size / spec.link_capacity + longest * spec.per_hop_latency,
        }
        for size in message_sizes
    ]
    df = pd.DataFrame(rows, columns=["message_size", "estimate"]).astype(float)
    return validate_dataframe(df, AlltoallCurveSchema, "all-to-all curve")
