"""Edge-list persistence.

Format (LF terminated, ASCII decimal):

    N K          header, K = common degree or -1 when irregular
    u v          one edge per line, u < v, sorted lexicographically

Lines starting with '#' are comments and ignored on load.
"""

import logging
from pathlib import Path

from errors import GraphFormatError

from .graph import Graph
from .metrics import is_regular

logger = logging.getLogger(__name__)


def _parse_pair(line: str, lineno: int, what: str) -> tuple[int, int]:
    fields = line.split()
    if len(fields) != 2:
        raise GraphFormatError(f"expected two integers for {what}, got '{line}'", lineno)
    try:
        return int(fields[0]), int(fields[1])
    except ValueError as e:
        raise GraphFormatError(f"non-integer {what} '{line}'", lineno) from e


def load_graph(text: str, name: str | None = None) -> Graph:
    """Parse an edge-list document into a connected Graph."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}

    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = _parse_pair(line, lineno, "header 'N K'")
            if header[0] < 1:
                raise GraphFormatError(f"vertex count must be positive, got {header[0]}", lineno)
            if header[1] < -1:
                raise GraphFormatError(f"degree must be -1 or non-negative, got {header[1]}", lineno)
            continue

        u, v = _parse_pair(line, lineno, "edge")
        n = header[0]
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u},{v}) references a vertex outside 0..{n - 1}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            kind = "asymmetric duplicate" if (u, v) != key else "duplicate"
            raise GraphFormatError(f"{kind} edge {key}, first listed on line {seen[key]}", lineno)
        seen[key] = lineno
        edges.append(key)

    if header is None:
        raise GraphFormatError("missing 'N K' header", 1)

    n, declared_degree = header
    graph = Graph.from_edges(n, edges, name=name)
    degree = is_regular(graph)
    if declared_degree != -1 and degree != declared_degree:
        raise GraphFormatError(f"header declares degree {declared_degree} but graph degrees are {sorted(set(graph.degrees()))}")
    logger.debug(f"Loaded graph with {n} vertices and {len(edges)} edges")
    return graph


def save_graph(graph: Graph) -> str:
    """Serialize a graph in canonical edge-list form."""
    degree = is_regular(graph)
    lines = [f"{graph.n} {degree if degree is not None else -1}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def read_graph_file(path: Path) -> Graph:
    """Load an edge-list file, naming the graph after the file stem."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise GraphFormatError(f"cannot read graph file {path}: {e}") from e
    return load_graph(text, name=Path(path).stem)
