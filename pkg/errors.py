"""Exception hierarchy for the nested network workbench."""


class WorkbenchError(Exception):
    """Base class for domain errors (CLI exit code 2)."""


class GraphFormatError(WorkbenchError, ValueError):
    """Edge-list or label-map document violates the file format."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class DisconnectedGraphError(WorkbenchError, ValueError):
    """Graph has more than one connected component."""

    def __init__(self, first: int, second: int):
        self.representatives = (first, second)
        super().__init__(
            f"graph is disconnected: vertices {first} and {second} lie in different components"
        )


class GraphSizeError(WorkbenchError, ValueError):
    """A size guard refused the request."""


class UnknownGraphError(WorkbenchError, ValueError):
    """Named graph family does not exist."""


class RegularGraphGenerationError(WorkbenchError):
    """No connected regular graph was produced within the retry budget."""

    def __init__(self, n: int, k: int, seed: int, attempts: int):
        self.seed = seed
        super().__init__(
            f"could not build a connected ({n},{k})-regular graph after {attempts} attempts (seed={seed})"
        )


class PathExplosionError(WorkbenchError):
    """A demand has more shortest paths than the enumeration cap allows."""

    def __init__(self, src: int, dst: int, count: int, cap: int):
        self.src = src
        self.dst = dst
        self.count = count
        self.cap = cap
        super().__init__(
            f"{count} shortest paths between {src} and {dst} exceed cap {cap}; raise --cap or refuse the graph"
        )


class SearchSpaceTooLargeError(WorkbenchError):
    """Exact routing solver refused a model whose selection space is too large."""

    def __init__(self, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(f"selection space {size} exceeds exact-solver limit {limit}; use the local solver")


class UnbalancedRoutingError(WorkbenchError):
    """A solved routing did not reach the required load band."""

    def __init__(self, instance: str, objective: object, band: int, max_band: int):
        self.instance = instance
        self.objective = objective
        self.band = band
        self.max_band = max_band
        super().__init__(
            f"routing for {instance} is unbalanced: band {band} > {max_band} (objective {objective})"
        )


class RoutingTableError(WorkbenchError, ValueError):
    """Routing table document or contents failed validation."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class FactorMismatchError(WorkbenchError, ValueError):
    """Factor routing tables do not match the product graph."""


class TableMismatchError(WorkbenchError, ValueError):
    """Routing table does not belong to the graph (or the other table) it is used with."""
