"""Sidecar label map for product graphs: one 'flat_id c0 c1 ... c(f-1)' line per vertex."""

from errors import GraphFormatError

from .cartesian import ProductGraph


def save_labels(pg: ProductGraph) -> str:
    lines = [f"# radices {' '.join(str(r) for r in pg.radices)}"]
    for v in range(pg.n):
        lines.append(" ".join(str(x) for x in (v, *pg.label_of(v))))
    return "\n".join(lines) + "\n"


def load_labels(text: str) -> dict[int, tuple[int, ...]]:
    """Parse a label map into flat id -> coordinate tuple."""
    labels: dict[int, tuple[int, ...]] = {}
    width = None
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values = [int(x) for x in line.split()]
        except ValueError as e:
            raise GraphFormatError(f"non-integer label line '{line}'", lineno) from e
        if len(values) < 2:
            raise GraphFormatError("label line needs a flat id and at least one coordinate", lineno)
        if width is None:
            width = len(values)
        elif len(values) != width:
            raise GraphFormatError(f"expected {width - 1} coordinates, got {len(values) - 1}", lineno)
        if values[0] in labels:
            raise GraphFormatError(f"flat id {values[0]} listed twice", lineno)
        labels[values[0]] = tuple(values[1:])
    return labels


def check_labels(pg: ProductGraph, labels: dict[int, tuple[int, ...]]) -> list[str]:
    """Mismatches between a parsed label map and the product's own labelling."""
    problems = []
    if set(labels) != set(range(pg.n)):
        problems.append(f"label map covers {len(labels)} ids, product has {pg.n}")
    for v, label in sorted(labels.items()):
        if 0 <= v < pg.n and pg.label_of(v) != label:
            problems.append(f"id {v}: file says {label}, product says {pg.label_of(v)}")
    return problems
