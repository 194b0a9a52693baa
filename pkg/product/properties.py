"""Verification of the Cartesian product laws on a built product."""

import logging
from dataclasses import dataclass, field
from math import prod

from topology import diameter

from .cartesian import ProductGraph, nested_product

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProductReport:
    size_ok: bool
    degree_ok: bool
    diameter_ok: bool
    commutative_ok: bool
    expected_diameter: int
    measured_diameter: int
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def commutes_by_relabeling(pg: ProductGraph) -> bool:
    """Reversed factor order gives the same graph under label reversal."""
    if len(pg.factors) < 2:
        return True
    reverse = nested_product(list(reversed(pg.factors)))
    mapping = [reverse.id_of(tuple(reversed(pg.label_of(v)))) for v in range(pg.n)]
    if reverse.graph.num_edges != pg.graph.num_edges:
        return False
    return all(reverse.graph.has_edge(mapping[u], mapping[v]) for u, v in pg.graph.edges())


def verify_product_properties(pg: ProductGraph) -> ProductReport:
    """Check size multiplicative, degree additive, diameter additive and commutativity."""
    violations = []

    size_ok = pg.n == prod(f.n for f in pg.factors)
    if not size_ok:
        violations.append(f"size {pg.n} != product of factor sizes {pg.radices}")

    degree_ok = True
    for v in range(pg.n):
        expected = sum(f.degree(c) for f, c in zip(pg.factors, pg.label_of(v), strict=True))
        if pg.graph.degree(v) != expected:
            degree_ok = False
            violations.append(f"degree of {pg.label_of(v)} is {pg.graph.degree(v)}, expected {expected}")
            break

    expected_diameter = sum(diameter(f) for f in pg.factors)
    measured_diameter = diameter(pg.graph)
    diameter_ok = expected_diameter == measured_diameter
    if not diameter_ok:
        violations.append(f"diameter {measured_diameter} != sum of factor diameters {expected_diameter}")

    commutative_ok = commutes_by_relabeling(pg)
    if not commutative_ok:
        violations.append("reversed-factor product does not match under label reversal")

    for violation in violations:
        logger.error(f"Product law violated: {violation}")
    return ProductReport(
        size_ok=size_ok,
        degree_ok=degree_ok,
        diameter_ok=diameter_ok,
        commutative_ok=commutative_ok,
        expected_diameter=expected_diameter,
        measured_diameter=measured_diameter,
        violations=violations,
    )
