"""Cartesian products with mixed-radix tuple labels.

A product vertex is a tuple of factor vertices <c0, c1, ..., c(f-1)>; its flat
id is the mixed-radix number with factor 0 most significant, so every copy of
the last factor occupies a contiguous id block.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from math import prod

from errors import GraphSizeError
from topology import Graph

logger = logging.getLogger(__name__)

MAX_PRODUCT_VERTICES = 1 << 20


@dataclass(frozen=True)
class ProductGraph:
    """Flattened product graph together with its factors."""

    graph: Graph
    factors: tuple[Graph, ...]

    @property
    def radices(self) -> tuple[int, ...]:
        return tuple(f.n for f in self.factors)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def right_size(self) -> int:
        """Order of the last factor."""
        return self.factors[-1].n

    @property
    def left_size(self) -> int:
        """Order of the product of all factors but the last."""
        return prod(self.radices[:-1])

    def label_of(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} outside 0..{self.n - 1}")
        coords = []
        for radix in reversed(self.radices):
            v, c = divmod(v, radix)
            coords.append(c)
        return tuple(reversed(coords))

    def id_of(self, label: Sequence[int]) -> int:
        if len(label) != len(self.factors):
            raise ValueError(f"label {tuple(label)} needs {len(self.factors)} coordinates")
        v = 0
        for c, radix in zip(label, self.radices, strict=True):
            if not 0 <= c < radix:
                raise ValueError(f"coordinate {c} outside 0..{radix - 1}")
            v = v * radix + c
        return v

    def split(self, v: int) -> tuple[int, int]:
        """(id in the left product, coordinate in the last factor)."""
        return divmod(v, self.right_size)

    def join(self, left: int, right: int) -> int:
        return left * self.right_size + right


def _as_product(g: Graph | ProductGraph) -> ProductGraph:
    if isinstance(g, ProductGraph):
        return g
    g.require_connected()
    return ProductGraph(graph=g, factors=(g,))


def _binary_product(g1: Graph, g2: Graph, name: str | None) -> Graph:
    n1, n2 = g1.n, g2.n
    adjacency = []
    for u in range(n1):
        row_neighbors = [x * n2 for x in g1.adjacency[u]]
        base = u * n2
        for v in range(n2):
            nbrs = [x + v for x in row_neighbors]
            nbrs.extend(base + w for w in g2.adjacency[v])
            nbrs.sort()
            adjacency.append(tuple(nbrs))
    return Graph(n=n1 * n2, adjacency=tuple(adjacency), name=name)


def cartesian_product(g1: Graph | ProductGraph, g2: Graph | ProductGraph) -> ProductGraph:
    """G1 x G2: labels adjacent iff they differ in one coordinate along a factor edge."""
    left, right = _as_product(g1), _as_product(g2)
    size = left.n * right.n
    if size > MAX_PRODUCT_VERTICES:
        raise GraphSizeError(f"product of {left.n} x {right.n} = {size} vertices exceeds {MAX_PRODUCT_VERTICES}")
    name = f"{left.graph.name or left.n}x{right.graph.name or right.n}"
    graph = _binary_product(left.graph, right.graph, name)
    logger.debug(f"Built product {name}: {graph.n} vertices, {graph.num_edges} edges")
    return ProductGraph(graph=graph, factors=left.factors + right.factors)


def nested_product(factors: Sequence[Graph]) -> ProductGraph:
    """Left-folded n-ary product ((F0 x F1) x F2) x ..."""
    if not factors:
        raise ValueError("at least one factor is required")
    size = prod(f.n for f in factors)
    if size > MAX_PRODUCT_VERTICES:
        raise GraphSizeError(f"product of {len(factors)} factors has {size} vertices, limit {MAX_PRODUCT_VERTICES}")
    result = _as_product(factors[0])
    for factor in factors[1:]:
        result = cartesian_product(result, factor)
    return result


def folded_power(g: Graph, alpha: int) -> ProductGraph:
    """Alpha-fold Cartesian power of g; alpha=1 yields g itself with 1-tuple labels."""
    if alpha < 1:
        raise ValueError(f"alpha must be at least 1, got {alpha}")
    if g.n**alpha > MAX_PRODUCT_VERTICES:
        raise GraphSizeError(f"{g.n}^{alpha} vertices exceeds {MAX_PRODUCT_VERTICES}")
    return nested_product([g] * alpha)
