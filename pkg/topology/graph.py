"""Immutable undirected simple graph over contiguous integer vertices."""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx
import numpy as np

from errors import DisconnectedGraphError, GraphFormatError

# Above this order the all-pairs distance matrix is computed per source.
MATRIX_BFS_LIMIT = 4096


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with vertices 0..n-1 and sorted neighbor lists.

    Instances are immutable and safe to share across threads. Equality ignores
    the optional name.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        name: str | None = None,
        require_connected: bool = True,
    ) -> Graph:
        """Build a graph from an edge iterable, rejecting loops, duplicates and bad ids."""
        if n < 1:
            raise GraphFormatError(f"vertex count must be positive, got {n}")
        neighbors: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u},{v}) references a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if v in neighbors[u]:
                raise GraphFormatError(f"duplicate edge ({min(u, v)},{max(u, v)})")
            neighbors[u].add(v)
            neighbors[v].add(u)
        graph = cls(n=n, adjacency=tuple(tuple(sorted(nbrs)) for nbrs in neighbors), name=name)
        if require_connected:
            graph.require_connected()
        return graph

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph, name: str | None = None) -> Graph:
        """Convert a networkx graph, relabelling nodes to 0..n-1 in sorted node order."""
        order = sorted(nx_graph.nodes())
        index = {node: i for i, node in enumerate(order)}
        edges = [(index[u], index[v]) for u, v in nx_graph.edges()]
        return cls.from_edges(len(order), edges, name=name)

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adjacency[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def with_name(self, name: str | None) -> Graph:
        return Graph(n=self.n, adjacency=self.adjacency, name=name)

    def components_representatives(self) -> list[int]:
        """Smallest vertex of every connected component, ascending."""
        seen = [False] * self.n
        representatives = []
        for start in range(self.n):
            if seen[start]:
                continue
            representatives.append(start)
            seen[start] = True
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
        return representatives

    def is_connected(self) -> bool:
        return len(self.components_representatives()) == 1

    def require_connected(self) -> None:
        representatives = self.components_representatives()
        if len(representatives) > 1:
            raise DisconnectedGraphError(representatives[0], representatives[1])

    @cached_property
    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self.n, self.n), dtype=np.float32)
        for u, nbrs in enumerate(self.adjacency):
            matrix[u, list(nbrs)] = 1.0
        return matrix

    @cached_property
    def _distances(self) -> np.ndarray:
        if self.n <= MATRIX_BFS_LIMIT:
            dist = bfs_distance_matrix(self.adjacency_matrix)
        else:
            dist = np.stack([np.asarray(bfs_distances(self, s), dtype=np.int32) for s in range(self.n)])
        dist.setflags(write=False)
        return dist

    def distance_matrix(self) -> np.ndarray:
        """All-pairs hop distances (read-only, -1 where unreachable)."""
        return self._distances


def bfs_distances(graph: Graph, source: int) -> list[int]:
    """Single-source hop distances, -1 for unreachable vertices."""
    dist = [-1] * graph.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in graph.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def bfs_distance_matrix(adjacency: np.ndarray) -> np.ndarray:
    """All-pairs BFS by simultaneous frontier expansion over a 0/1 adjacency matrix."""
    n = adjacency.shape[0]
    a = adjacency.astype(np.float32, copy=False)
    dist = np.full((n, n), -1, dtype=np.int32)
    np.fill_diagonal(dist, 0)
    visited = np.eye(n, dtype=bool)
    frontier = visited.copy()
    level = 0
    while True:
        level += 1
        frontier = ((frontier.astype(np.float32) @ a) > 0) & ~visited
        if not frontier.any():
            break
        dist[frontier] = level
        visited |= frontier
    return dist


def summarize_distances(dist: np.ndarray) -> tuple[int, int] | None:
    """(total distance over unordered pairs, diameter), or None when some pair is unreachable."""
    if (dist < 0).any():
        return None
    return int(dist.sum()) // 2, int(dist.max())
