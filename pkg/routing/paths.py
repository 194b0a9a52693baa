"""Shortest-path enumeration over the BFS distance DAG."""

from errors import PathExplosionError
from topology import Graph

DEFAULT_PATH_CAP = 4096

Path = tuple[int, ...]


def count_shortest_paths(graph: Graph, src: int, dst: int) -> int:
    """Number of distinct shortest src-dst paths (dynamic programming over BFS levels)."""
    dist = graph.distance_matrix()
    d = int(dist[src, dst])
    if d < 0:
        return 0
    from_src, to_dst = dist[src], dist[dst]
    counts = {src: 1}
    layer = [src]
    for level in range(1, d + 1):
        nxt: dict[int, int] = {}
        for u in layer:
            for w in graph.adjacency[u]:
                if from_src[w] == level and to_dst[w] == d - level:
                    nxt[w] = nxt.get(w, 0) + counts[u]
        counts = nxt
        layer = sorted(nxt)
    return counts.get(dst, 0)


def all_shortest_paths(graph: Graph, src: int, dst: int, cap: int = DEFAULT_PATH_CAP) -> list[Path]:
    """Every shortest path from src to dst, in lexicographic vertex order.

    Raises PathExplosionError instead of truncating when there are more than
    `cap` of them.
    """
    if src == dst:
        raise ValueError(f"source and destination must differ, got {src}")
    if cap < 1:
        raise ValueError(f"cap must be at least 1, got {cap}")
    count = count_shortest_paths(graph, src, dst)
    if count > cap:
        raise PathExplosionError(src, dst, count, cap)

    dist = graph.distance_matrix()
    to_dst = dist[dst]
    paths: list[Path] = []
    stack: list[int] = [src]

    def walk(u: int) -> None:
        if u == dst:
            paths.append(tuple(stack))
            return
        remaining = to_dst[u] - 1
        for w in graph.adjacency[u]:
            if to_dst[w] == remaining:
                stack.append(w)
                walk(w)
                stack.pop()

    walk(src)
    return paths


def path_interior(path: Path) -> Path:
    """Forwarding vertices of a path (endpoints excluded)."""
    return path[1:-1]
