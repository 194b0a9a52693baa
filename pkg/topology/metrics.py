"""Topological metrics of base and product graphs: diameter, MPL and bisection width."""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

import networkx as nx
import pandas as pd
from networkx.algorithms.community import kernighan_lin_bisection

from errors import GraphSizeError
from utils import derive_seed
from validation import GraphMetricsSchema, validate_dataframe

from .graph import Graph, summarize_distances

logger = logging.getLogger(__name__)

EXACT_AUTO_LIMIT = 20  # auto mode enumerates subsets up to this order
EXACT_HARD_LIMIT = 28  # exact mode refuses above this order
DEFAULT_BISECTION_RESTARTS = 32
KL_MAX_ITER = 20


class BisectionMode(StrEnum):
    AUTO = "auto"
    EXACT = "exact"
    HEURISTIC = "heuristic"


class Exactness(StrEnum):
    EXACT = "exact"
    HEURISTIC = "heuristic-upper-bound"


class Bisection(NamedTuple):
    width: int
    exactness: Exactness


@dataclass(frozen=True)
class GraphMetrics:
    """Size, degree, diameter, mean path length and bisection width of one graph."""

    n: int
    degree: int | None
    diameter: int
    mpl: Fraction
    bisection_width: int
    bisection_exactness: Exactness


def _connected_summary(graph: Graph) -> tuple[int, int]:
    graph.require_connected()
    summary = summarize_distances(graph.distance_matrix())
    assert summary is not None
    return summary


def diameter(graph: Graph) -> int:
    """Maximum BFS distance over all vertex pairs."""
    return _connected_summary(graph)[1]


def total_distance(graph: Graph) -> int:
    """Sum of BFS distances over unordered distinct pairs."""
    return _connected_summary(graph)[0]


def mean_path_length(graph: Graph) -> Fraction:
    """Exact mean shortest-path length over unordered distinct pairs."""
    if graph.n < 2:
        return Fraction(0)
    pairs = graph.n * (graph.n - 1) // 2
    return Fraction(total_distance(graph), pairs)


def is_regular(graph: Graph) -> int | None:
    """Common vertex degree, or None when degrees differ."""
    degrees = set(graph.degrees())
    return degrees.pop() if len(degrees) == 1 else None


def _exact_bisection(graph: Graph) -> int:
    n = graph.n
    masks = [sum(1 << w for w in nbrs) for nbrs in graph.adjacency]
    half = n // 2
    if n % 2 == 0:
        # fix vertex 0 on the enumerated side to halve the work
        subsets = ((0, *rest) for rest in combinations(range(1, n), half - 1))
    else:
        subsets = combinations(range(n), half)

    best = graph.num_edges
    for subset in subsets:
        side = 0
        for v in subset:
            side |= 1 << v
        cut = 0
        for v in subset:
            cut += (masks[v] & ~side).bit_count()
            if cut >= best:
                break
        if cut < best:
            best = cut
    return best


def _kl_restart(nx_graph: nx.Graph, seed: int) -> int:
    side_a, side_b = kernighan_lin_bisection(nx_graph, max_iter=KL_MAX_ITER, seed=seed)
    return int(nx.cut_size(nx_graph, side_a, side_b))


def bisection_width(
    graph: Graph,
    mode: BisectionMode | str = BisectionMode.AUTO,
    restarts: int = DEFAULT_BISECTION_RESTARTS,
    seed: int = 0,
    threads: int = 1,
) -> Bisection:
    """Minimum number of edges cut by a balanced (floor/ceil) vertex partition.

    Exact mode enumerates subsets; heuristic mode runs seeded Kernighan-Lin
    restarts and reports the best cut as an upper bound. The reduction is a
    plain minimum, so the result does not depend on `threads`.
    """
    mode = BisectionMode(mode)
    graph.require_connected()
    if mode == BisectionMode.AUTO:
        mode = BisectionMode.EXACT if graph.n <= EXACT_AUTO_LIMIT else BisectionMode.HEURISTIC

    if mode == BisectionMode.EXACT:
        if graph.n > EXACT_HARD_LIMIT:
            raise GraphSizeError(
                f"exact bisection refused for n={graph.n} (limit {EXACT_HARD_LIMIT}); use --bisection heuristic"
            )
        width = _exact_bisection(graph)
        logger.debug(f"Exact bisection width {width} for n={graph.n}")
        return Bisection(width, Exactness.EXACT)

    nx_graph = graph.to_networkx()
    seeds = [derive_seed(seed, i) for i in range(max(1, restarts))]
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        cuts = list(pool.map(lambda s: _kl_restart(nx_graph, s), seeds))
    best_index = min(range(len(cuts)), key=lambda i: (cuts[i], i))
    logger.debug(f"Heuristic bisection width {cuts[best_index]} (restart {best_index} of {len(cuts)})")
    return Bisection(cuts[best_index], Exactness.HEURISTIC)


def graph_metrics(
    graph: Graph,
    bisection_mode: BisectionMode | str = BisectionMode.AUTO,
    restarts: int = DEFAULT_BISECTION_RESTARTS,
    seed: int = 0,
    threads: int = 1,
) -> GraphMetrics:
    total, diam = _connected_summary(graph)
    pairs = graph.n * (graph.n - 1) // 2
    bisection = bisection_width(graph, bisection_mode, restarts=restarts, seed=seed, threads=threads)
    return GraphMetrics(
        n=graph.n,
        degree=is_regular(graph),
        diameter=diam,
        mpl=Fraction(total, pairs) if pairs else Fraction(0),
        bisection_width=bisection.width,
        bisection_exactness=bisection.exactness,
    )


def metrics_table(named: dict[str, GraphMetrics]) -> pd.DataFrame:
    """Validated metrics frame, one row per graph."""
    rows = [
        {
            "graph": name,
            "n": m.n,
            "k": m.degree if m.degree is not None else -1,
            "diameter": m.diameter,
            "mpl": float(m.mpl),
            "bisection_width": m.bisection_width,
            "bisection_exact": m.bisection_exactness == Exactness.EXACT,
        }
        for name, m in named.items()
    ]
    return validate_dataframe(pd.DataFrame(rows), GraphMetricsSchema, "graph metrics")
