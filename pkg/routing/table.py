"""Static source-routing tables and their text format.

    ROUTES <mode> <N> <num_demands>
    src dst len v0 v1 ... v_len

One line per demand, sorted by (src, dst). Unordered tables list src < dst
only and serve the reverse direction with the reversed path. Lines starting
with '#' are provenance comments.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property

from errors import RoutingTableError, TableMismatchError
from topology import Graph
from utils import format_rational

from .model import DemandMode, LoadProfile, RoutingModel, Selection, demands_for, loads_from_paths
from .paths import Path

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RoutingTable:
    demand_mode: DemandMode
    n: int
    paths: tuple[Path, ...]

    @cached_property
    def _index(self) -> dict[tuple[int, int], Path]:
        return {(p[0], p[-1]): p for p in self.paths}

    def __len__(self) -> int:
        return len(self.paths)

    def path(self, src: int, dst: int) -> Path:
        """Selected path for src -> dst (reversed entry for unordered tables)."""
        if self.demand_mode == DemandMode.UNORDERED and src > dst:
            return tuple(reversed(self._index[(dst, src)]))
        return self._index[(src, dst)]

    @cached_property
    def next_hops(self) -> dict[tuple[int, int], dict[int, int]]:
        """Per-demand next-hop map: next_hops[(src, dst)][node] is node's successor."""
        hops: dict[tuple[int, int], dict[int, int]] = {}
        for p in self.paths:
            hops[(p[0], p[-1])] = dict(zip(p[:-1], p[1:], strict=True))
            if self.demand_mode == DemandMode.UNORDERED:
                back = p[::-1]
                hops[(back[0], back[-1])] = dict(zip(back[:-1], back[1:], strict=True))
        return hops

    def next_hop(self, node: int, src: int, dst: int) -> int:
        return self.next_hops[(src, dst)][node]


def routing_table(model: RoutingModel, selection: Selection) -> RoutingTable:
    return RoutingTable(
        demand_mode=model.demand_mode,
        n=model.graph.n,
        paths=tuple(model.selected_paths(selection)),
    )


def export_routing_table(table: RoutingTable) -> str:
    lines = [f"ROUTES {table.demand_mode} {table.n} {len(table.paths)}"]
    for p in table.paths:
        lines.append(" ".join(str(x) for x in (p[0], p[-1], len(p) - 1, *p)))
    return "\n".join(lines) + "\n"


def load_routing_table(text: str, graph: Graph | None = None) -> RoutingTable:
    """Parse the table format; with `graph`, also run validate_routing_table."""
    header = None
    paths: list[Path] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 4 or tokens[0] != "ROUTES":
                raise RoutingTableError(f"expected 'ROUTES <mode> <N> <num_demands>', got '{line}'", lineno)
            try:
                mode = DemandMode(tokens[1])
                header = (mode, int(tokens[2]), int(tokens[3]))
            except ValueError as e:
                raise RoutingTableError(f"malformed header '{line}'", lineno) from e
            continue
        try:
            values = [int(x) for x in tokens]
        except ValueError as e:
            raise RoutingTableError(f"non-integer token in '{line}'", lineno) from e
        if len(values) < 5:
            raise RoutingTableError("route line needs src, dst, len and at least two vertices", lineno)
        src, dst, length, vertices = values[0], values[1], values[2], tuple(values[3:])
        if len(vertices) != length + 1:
            raise RoutingTableError(f"declared length {length} but {len(vertices) - 1} hops listed", lineno)
        if vertices[0] != src or vertices[-1] != dst:
            raise RoutingTableError(f"path does not run from {src} to {dst}", lineno)
        if paths and (src, dst) <= (paths[-1][0], paths[-1][-1]):
            raise RoutingTableError(f"demand ({src},{dst}) is out of order or repeated", lineno)
        paths.append(vertices)

    if header is None:
        raise RoutingTableError("missing ROUTES header")
    mode, n, count = header
    if count != len(paths):
        raise RoutingTableError(f"header declares {count} demands, found {len(paths)}")
    table = RoutingTable(demand_mode=mode, n=n, paths=tuple(paths))
    if graph is not None:
        validate_routing_table(table, graph)
    return table


def validate_routing_table(table: RoutingTable, graph: Graph) -> None:
    """Raise RoutingTableError unless every demand is present with an adjacent, shortest path."""
    if table.n != graph.n:
        raise TableMismatchError(f"table covers {table.n} vertices, graph has {graph.n}")
    expected = [(d.src, d.dst) for d in demands_for(graph.n, table.demand_mode)]
    present = [(p[0], p[-1]) for p in table.paths]
    if present != expected:
        missing = sorted(set(expected) - set(present))
        extra = sorted(set(present) - set(expected))
        detail = f"missing demand {missing[0]}" if missing else f"unexpected demand {extra[0]}"
        raise RoutingTableError(f"table does not list every {table.demand_mode} demand once: {detail}")
    dist = graph.distance_matrix()
    for p in table.paths:
        for u, v in zip(p[:-1], p[1:], strict=True):
            if not (0 <= u < graph.n and 0 <= v < graph.n) or not graph.has_edge(u, v):
                raise RoutingTableError(f"path {p}: {u} and {v} are not adjacent")
        if len(p) - 1 != dist[p[0], p[-1]]:
            raise RoutingTableError(
                f"path {p} has length {len(p) - 1}, shortest distance is {int(dist[p[0], p[-1]])}"
            )


def table_load_profile(table: RoutingTable) -> LoadProfile:
    """Node loads of a table, counting each listed demand once."""
    return loads_from_paths(table.n, table.paths)


def format_load_profile(profile: LoadProfile) -> str:
    lines = [f"{node} {load}" for node, load in enumerate(profile.d)]
    lines.append(f"objective {format_rational(profile.objective)}")
    return "\n".join(lines) + "\n"


def graph_from_table(table: RoutingTable, name: str | None = None) -> Graph:
    """Recover the graph a complete table routes over.

    Adjacent vertex pairs are exactly the demands routed in one hop.
    """
    edges = {(min(p[0], p[-1]), max(p[0], p[-1])) for p in table.paths if len(p) == 2}
    return Graph.from_edges(table.n, sorted(edges), name=name)
