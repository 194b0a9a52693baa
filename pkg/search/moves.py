"""Degree-preserving moves over regular graphs and the random initializer."""

import logging

import networkx as nx
import numpy as np

from errors import GraphSizeError, RegularGraphGenerationError
from topology import Graph, bfs_distance_matrix, summarize_distances
from utils import derive_seed

logger = logging.getLogger(__name__)

MAX_GENERATION_ATTEMPTS = 200
MAX_SWAP_TRIES = 100


def random_regular(n: int, k: int, seed: int, max_attempts: int = MAX_GENERATION_ATTEMPTS) -> Graph:
    """Connected k-regular graph on n vertices from the pairing model.

    Disconnected draws are rejected and redrawn with the next derived seed.
    """
    if (n * k) % 2 or not 0 < k < n:
        raise GraphSizeError(f"no simple ({n},{k})-regular graph: need 0 < k < n and n*k even")
    for attempt in range(max_attempts):
        nx_graph = nx.random_regular_graph(k, n, seed=derive_seed(seed, attempt))
        if nx.is_connected(nx_graph):
            if attempt:
                logger.debug(f"random_regular({n},{k}) connected after {attempt + 1} draws")
            return Graph.from_networkx(nx_graph, name=f"random({n},{k})")
    raise RegularGraphGenerationError(n, k, seed, max_attempts)


def _rewired(e1: tuple[int, int], e2: tuple[int, int], cross: bool) -> tuple[tuple[int, int], tuple[int, int]]:
    (a, b), (c, d) = e1, e2
    if cross:
        return (min(a, d), max(a, d)), (min(b, c), max(b, c))
    return (min(a, c), max(a, c)), (min(b, d), max(b, d))


def swap_edges(graph: Graph, e1: tuple[int, int], e2: tuple[int, int], cross: bool = False) -> Graph | None:
    """Rewire (a,b),(c,d) to (a,c),(b,d), or to (a,d),(b,c) when `cross`.

    Returns None when the move would create a self-loop, a duplicate edge or
    disconnect the graph.
    """
    if not (graph.has_edge(*e1) and graph.has_edge(*e2)):
        raise ValueError(f"{e1} and {e2} must both be edges")
    if len({*e1, *e2}) < 4:
        return None
    new1, new2 = _rewired(e1, e2, cross)
    if graph.has_edge(*new1) or graph.has_edge(*new2):
        return None
    removed = {tuple(sorted(e1)), tuple(sorted(e2))}
    edges = [e for e in graph.edges() if e not in removed] + [new1, new2]
    candidate = Graph.from_edges(graph.n, edges, name=graph.name, require_connected=False)
    if not candidate.is_connected():
        return None
    return candidate


def double_edge_swap(graph: Graph, rng: np.random.Generator, max_tries: int = MAX_SWAP_TRIES) -> Graph:
    """One random accepted double edge swap; the graph is returned unchanged if none is found."""
    edges = graph.edges()
    if len(edges) < 2:
        return graph
    for _ in range(max_tries):
        i = int(rng.integers(len(edges)))
        j = int(rng.integers(len(edges) - 1))
        if j >= i:
            j += 1
        swapped = swap_edges(graph, edges[i], edges[j], cross=bool(rng.integers(2)))
        if swapped is not None:
            return swapped
    return graph


class SwapState:
    """Mutable edge list plus dense adjacency used inside the annealing loop."""

    def __init__(self, graph: Graph):
        self.n = graph.n
        self.edges: list[tuple[int, int]] = graph.edges()
        self.matrix = graph.adjacency_matrix.copy()

    def propose(self, rng: np.random.Generator) -> tuple[int, int, tuple[int, int], tuple[int, int]] | None:
        """Draw a move; None when it would create a self-loop or a duplicate edge."""
        m = len(self.edges)
        i = int(rng.integers(m))
        j = int(rng.integers(m - 1))
        if j >= i:
            j += 1
        cross = bool(rng.integers(2))
        e1, e2 = self.edges[i], self.edges[j]
        if len({*e1, *e2}) < 4:
            return None
        new1, new2 = _rewired(e1, e2, cross)
        if self.matrix[new1] or self.matrix[new2]:
            return None
        return i, j, new1, new2

    def _set(self, edge: tuple[int, int], value: float) -> None:
        u, v = edge
        self.matrix[u, v] = value
        self.matrix[v, u] = value

    def apply(self, move: tuple[int, int, tuple[int, int], tuple[int, int]]) -> tuple[tuple[int, int], tuple[int, int]]:
        i, j, new1, new2 = move
        old = self.edges[i], self.edges[j]
        for edge in old:
            self._set(edge, 0.0)
        self._set(new1, 1.0)
        self._set(new2, 1.0)
        self.edges[i], self.edges[j] = new1, new2
        return old

    def revert(self, move: tuple[int, int, tuple[int, int], tuple[int, int]], old) -> None:
        i, j, new1, new2 = move
        self._set(new1, 0.0)
        self._set(new2, 0.0)
        for edge in old:
            self._set(edge, 1.0)
        self.edges[i], self.edges[j] = old

    def evaluate(self) -> tuple[int, int] | None:
        """(total distance, diameter), or None if the current graph is disconnected."""
        return summarize_distances(bfs_distance_matrix(self.matrix))
