"""Balanced routing on Cartesian products from routings of the factors.

A product vertex is <u, v> with u in the left product and v in the last
factor. Demands that stay in one copy of a factor reuse that factor's path.
Mixed demands travel along one factor first and then the other. With
ordered-mode factor tables and one fixed order, node <a, b> carries

    d(<a, b>) = d1(a) * n2 + d2(b) * n1 + (n1 - 1) * (n2 - 1)

so zero-objective factor tables yield a zero-objective product table.
"""

import logging
from enum import StrEnum

from errors import FactorMismatchError, RoutingTableError, TableMismatchError
from product import ProductGraph, nested_product
from topology import Graph

from .model import DemandMode
from .paths import Path
from .table import RoutingTable, validate_routing_table

logger = logging.getLogger(__name__)


class ComposeOrder(StrEnum):
    G1_FIRST = "g1_first"
    G2_FIRST = "g2_first"


def _compose(r1: RoutingTable, r2: RoutingTable, order: ComposeOrder) -> RoutingTable:
    n1, n2 = r1.n, r2.n
    paths: list[Path] = []
    for src in range(n1 * n2):
        u1, v1 = divmod(src, n2)
        for dst in range(n1 * n2):
            if dst == src:
                continue
            u2, v2 = divmod(dst, n2)
            if v1 == v2:
                path = tuple(x * n2 + v1 for x in r1.path(u1, u2))
            elif u1 == u2:
                path = tuple(u1 * n2 + y for y in r2.path(v1, v2))
            elif order == ComposeOrder.G1_FIRST:
                leg1 = [x * n2 + v1 for x in r1.path(u1, u2)]
                leg2 = [u2 * n2 + y for y in r2.path(v1, v2)]
                path = tuple(leg1 + leg2[1:])
            else:
                leg1 = [u1 * n2 + y for y in r2.path(v1, v2)]
                leg2 = [x * n2 + v2 for x in r1.path(u1, u2)]
                path = tuple(leg1 + leg2[1:])
            paths.append(path)
    return RoutingTable(demand_mode=DemandMode.ORDERED, n=n1 * n2, paths=tuple(paths))


def _require_routes(table: RoutingTable, graph: Graph, label: str) -> None:
    try:
        validate_routing_table(table, graph)
    except (RoutingTableError, TableMismatchError) as e:
        raise FactorMismatchError(f"{label} table does not route its factor: {e}") from e


def _require_ordered(table: RoutingTable, label: str) -> None:
    if table.demand_mode != DemandMode.ORDERED:
        raise FactorMismatchError(f"{label} table is {table.demand_mode}; composition needs ordered-mode tables")


def compose_product_routing(
    r1: RoutingTable,
    r2: RoutingTable,
    pg: ProductGraph,
    order: ComposeOrder = ComposeOrder.G1_FIRST,
) -> RoutingTable:
    """Ordered-mode routing on pg from r1 (left product) and r2 (last factor).

    Each table must route its factor with shortest paths, otherwise
    FactorMismatchError is raised.
    """
    order = ComposeOrder(order)
    _require_ordered(r1, "first")
    _require_ordered(r2, "second")
    if len(pg.factors) < 2:
        raise FactorMismatchError("composition needs a product of at least two factors")
    if r1.n != pg.left_size or r2.n != pg.right_size:
        raise FactorMismatchError(
            f"tables cover {r1.n} and {r2.n} vertices, product splits into {pg.left_size} x {pg.right_size}"
        )
    _require_routes(r1, nested_product(pg.factors[:-1]).graph, "first")
    _require_routes(r2, pg.factors[-1], "second")
    table = _compose(r1, r2, order)
    logger.info(f"Composed {order} routing on {pg.n} vertices: {len(table)} demands")
    return table


def compose_power_routing(
    base: RoutingTable,
    pg: ProductGraph,
    order: ComposeOrder = ComposeOrder.G1_FIRST,
) -> RoutingTable:
    """Iterate composition over an alpha-fold power whose factors all match `base`."""
    order = ComposeOrder(order)
    _require_ordered(base, "base")
    if any(f.n != base.n for f in pg.factors):
        raise FactorMismatchError(f"every factor must have {base.n} vertices, got radices {pg.radices}")
    for factor in dict.fromkeys(pg.factors):
        _require_routes(base, factor, "base")
    table = base
    for _ in pg.factors[1:]:
        table = _compose(table, base, order)
    logger.info(f"Composed {len(pg.factors)}-fold {order} routing on {pg.n} vertices")
    return table
