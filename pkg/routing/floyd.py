"""Floyd-Warshall single-path routing, the unbalanced baseline."""

import logging

import numpy as np

from topology import Graph

from .model import DemandMode, demands_for
from .table import RoutingTable

logger = logging.getLogger(__name__)


def floyd_next_hops(graph: Graph) -> np.ndarray:
    """Next-hop matrix from Floyd-Warshall with k ascending and strict-improvement updates.

    next[i, j] is the neighbor of i on the chosen i->j path (-1 on the diagonal).
    """
    graph.require_connected()
    n = graph.n
    dist = np.full((n, n), np.inf)
    np.fill_diagonal(dist, 0.0)
    nxt = np.full((n, n), -1, dtype=np.int64)
    for u, v in graph.edges():
        dist[u, v] = dist[v, u] = 1.0
        nxt[u, v] = v
        nxt[v, u] = u
    for k in range(n):
        through = dist[:, k, None] + dist[None, k, :]
        better = through < dist
        if better.any():
            dist = np.where(better, through, dist)
            nxt = np.where(better, nxt[:, k, None], nxt)
    return nxt


def _follow(nxt: np.ndarray, src: int, dst: int) -> tuple[int, ...]:
    path = [src]
    while path[-1] != dst:
        path.append(int(nxt[path[-1], dst]))
    return tuple(path)


def floyd_routing(graph: Graph, demand_mode: DemandMode = DemandMode.UNORDERED) -> RoutingTable:
    demand_mode = DemandMode(demand_mode)
    nxt = floyd_next_hops(graph)
    demands = demands_for(graph.n, demand_mode)
    paths = tuple(_follow(nxt, d.src, d.dst) for d in demands)
    logger.info(f"Floyd routing for {graph.name or graph.n}: {len(paths)} {demand_mode} demands")
    return RoutingTable(demand_mode=demand_mode, n=graph.n, paths=paths)
