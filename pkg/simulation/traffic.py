"""Flow-level load accounting for a routing table under uniform all-to-all traffic."""

import logging
from concurrent.futures import ThreadPoolExecutor
from enum import StrEnum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from errors import TableMismatchError
from routing import DemandMode, RoutingTable
from topology import Graph

logger = logging.getLogger(__name__)

# Per-link latency of the modelled full-duplex links, in seconds.
DEFAULT_HOP_LATENCY = 30e-6


class TrafficPattern(StrEnum):
    ALL_TO_ALL_UNIFORM = "all_to_all_uniform"


class TrafficSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    pattern: TrafficPattern = TrafficPattern.ALL_TO_ALL_UNIFORM
    flow: float = Field(1.0, ge=0)
    link_capacity: float = Field(1.0, gt=0)
    per_hop_latency: float = Field(DEFAULT_HOP_LATENCY, ge=0)


def directed_links(graph: Graph) -> list[tuple[int, int]]:
    """Every directed edge (u, v), sorted; the index order of link-load vectors."""
    return [(u, v) for u in range(graph.n) for v in graph.adjacency[u]]


def _chunks(paths: tuple, threads: int) -> list[tuple]:
    size = max(1, -(-len(paths) // max(1, threads)))
    return [paths[i : i + size] for i in range(0, len(paths), size)] or [()]


def _check_table(table: RoutingTable, graph: Graph | None) -> None:
    if graph is not None and table.n != graph.n:
        raise TableMismatchError(f"table covers {table.n} vertices, graph has {graph.n}")


def node_load_counts(table: RoutingTable, graph: Graph | None = None, threads: int = 1) -> np.ndarray:
    """Demands forwarded by each node (endpoints excluded, each listed demand once)."""
    _check_table(table, graph)

    def count(chunk: tuple) -> np.ndarray:
        counts = np.zeros(table.n, dtype=np.int64)
        for path in chunk:
            for v in path[1:-1]:
                counts[v] += 1
        return counts

    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        parts = list(pool.map(count, _chunks(table.paths, threads)))
    return np.sum(parts, axis=0)


def link_load_counts(table: RoutingTable, graph: Graph, threads: int = 1) -> np.ndarray:
    """Demands crossing each directed link, aligned with directed_links(graph).

    Unordered demands cross their path in both directions.
    """
    _check_table(table, graph)
    index = {link: i for i, link in enumerate(directed_links(graph))}
    both_ways = table.demand_mode == DemandMode.UNORDERED

    def count(chunk: tuple) -> np.ndarray:
        counts = np.zeros(len(index), dtype=np.int64)
        for path in chunk:
            for u, v in zip(path[:-1], path[1:], strict=True):
                try:
                    counts[index[(u, v)]] += 1
                    if both_ways:
                        counts[index[(v, u)]] += 1
                except KeyError as e:
                    raise TableMismatchError(f"path {path} uses ({u},{v}), which is not a graph edge") from e
        return counts

    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        parts = list(pool.map(count, _chunks(table.paths, threads)))
    return np.sum(parts, axis=0)


def node_loads(
    table: RoutingTable, spec: TrafficSpec | None = None, graph: Graph | None = None, threads: int = 1
) -> np.ndarray:
    spec = spec or TrafficSpec()
    return node_load_counts(table, graph, threads) * spec.flow


def link_loads(table: RoutingTable, graph: Graph, spec: TrafficSpec | None = None, threads: int = 1) -> np.ndarray:
    spec = spec or TrafficSpec()
    return link_load_counts(table, graph, threads) * spec.flow
