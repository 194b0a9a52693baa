"""Load-balanced shortest-path routing: model, solvers, tables and product composition."""

from .compose import ComposeOrder, compose_power_routing, compose_product_routing
from .floyd import floyd_next_hops, floyd_routing
from .model import (
    Demand,
    DemandGroup,
    DemandMode,
    LoadProfile,
    RoutingModel,
    Selection,
    build_model,
    demands_for,
    load_profile,
    loads_from_paths,
    min_sum_squares,
    objective,
)
from .paths import DEFAULT_PATH_CAP, all_shortest_paths, count_shortest_paths, path_interior
from .solvers import (
    EXACT_LEAF_LIMIT,
    RoutingSolution,
    SolverKind,
    require_balanced,
    solve,
    solve_exact,
    solve_local,
)
from .table import (
    RoutingTable,
    export_routing_table,
    format_load_profile,
    graph_from_table,
    load_routing_table,
    routing_table,
    table_load_profile,
    validate_routing_table,
)

__all__ = [
    "DEFAULT_PATH_CAP",
    "EXACT_LEAF_LIMIT",
    "ComposeOrder",
    "Demand",
    "DemandGroup",
    "DemandMode",
    "LoadProfile",
    "RoutingModel",
    "RoutingSolution",
    "RoutingTable",
    "Selection",
    "SolverKind",
    "all_shortest_paths",
    "build_model",
    "compose_power_routing",
    "compose_product_routing",
    "count_shortest_paths",
    "demands_for",
    "export_routing_table",
    "floyd_next_hops",
    "floyd_routing",
    "format_load_profile",
    "graph_from_table",
    "load_profile",
    "load_routing_table",
    "loads_from_paths",
    "min_sum_squares",
    "objective",
    "path_interior",
    "require_balanced",
    "routing_table",
    "solve",
    "solve_exact",
    "solve_local",
    "table_load_profile",
    "validate_routing_table",
]
