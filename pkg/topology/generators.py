"""Named graph generators: the classical low-radix base graphs and simple families."""

import logging
import re

import networkx as nx

from errors import UnknownGraphError

from .graph import Graph

logger = logging.getLogger(__name__)

# Tutte-Coxeter graph (Levi graph of GQ(2,2)) in LCF notation
LEVI_LCF = ([-13, -9, 7, -7, 9, 13], 5)

FIXED_GRAPHS = {
    "petersen": nx.petersen_graph,
    "heawood": nx.heawood_graph,
    "levi": lambda: nx.LCF_graph(30, *LEVI_LCF),
}

# family -> inclusive parameter range
PARAMETRIC_RANGES = {
    "hypercube": (1, 16),
    "complete": (2, 16),
    "cycle": (2, 16),
}

_NAME_PATTERN = re.compile(r"^\s*([a-z_]+)\s*(?:[(:]\s*(\d+)\s*\)?)?\s*$")


def parse_graph_name(text: str) -> tuple[str, int | None]:
    """Split 'hypercube(3)' / 'hypercube:3' / 'petersen' into (family, parameter)."""
    match = _NAME_PATTERN.match(text.lower())
    if not match:
        raise UnknownGraphError(f"cannot parse graph name '{text}'")
    family, param = match.groups()
    return family, int(param) if param is not None else None


def hypercube(m: int) -> Graph:
    """Q_m with binary-label adjacency: u ~ u xor 2^i."""
    n = 1 << m
    edges = [(u, u ^ (1 << i)) for u in range(n) for i in range(m) if u < u ^ (1 << i)]
    return Graph.from_edges(n, edges, name=f"hypercube({m})")


def named_graph(name: str, m: int | None = None) -> Graph:
    """Return the canonical graph for a family name.

    `name` may carry its parameter inline ('hypercube(3)'); otherwise pass `m`
    for the parametric families.
    """
    family, inline = parse_graph_name(name)
    if inline is not None:
        if m is not None and m != inline:
            raise UnknownGraphError(f"conflicting parameters for '{name}': {inline} vs {m}")
        m = inline

    if family in FIXED_GRAPHS:
        if m is not None:
            raise UnknownGraphError(f"'{family}' takes no parameter")
        return Graph.from_networkx(FIXED_GRAPHS[family](), name=family)

    if family not in PARAMETRIC_RANGES:
        known = sorted([*FIXED_GRAPHS, *PARAMETRIC_RANGES])
        raise UnknownGraphError(f"unknown graph '{family}' (known: {', '.join(known)})")

    low, high = PARAMETRIC_RANGES[family]
    if m is None:
        raise UnknownGraphError(f"'{family}' needs a parameter m in {low}..{high}")
    if not low <= m <= high:
        raise UnknownGraphError(f"'{family}' parameter {m} outside {low}..{high}")

    logger.debug(f"Generating {family}({m})")
    if family == "hypercube":
        return hypercube(m)
    if family == "complete":
        return Graph.from_networkx(nx.complete_graph(m), name=f"complete({m})")
    return Graph.from_networkx(nx.cycle_graph(m), name=f"cycle({m})")


def path_graph(n: int) -> Graph:
    return Graph.from_networkx(nx.path_graph(n), name=f"path({n})")
