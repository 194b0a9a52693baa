"""Helper functions for CLI commands.

Input resolution, artifact writing and the routing pipeline steps shared by
the subcommands in main.py.
"""

import logging
import sys
from pathlib import Path

import typer

from errors import RoutingTableError
from routing import (
    LoadProfile,
    RoutingTable,
    SolverKind,
    build_model,
    floyd_routing,
    load_routing_table,
    routing_table,
    solve,
    solve_exact,
    solve_local,
    table_load_profile,
)
from safety import ArtifactWriter
from search import AnnealSchedule
from topology import Graph, named_graph, read_graph_file
from utils import format_metadata, get_default_threads

from .config import RunConfig

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"

# options that never influence artifact contents
NON_PROVENANCE_PARAMS = {"threads", "verbose", "no_header"}


def configure_logging(verbose: bool) -> None:
    """Send library logs to stderr: INFO with --verbose, warnings otherwise."""
    logging.basicConfig(level=logging.INFO, format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger().setLevel(logging.INFO if verbose else logging.WARNING)


def resolve_threads(threads: int | None) -> int:
    return threads if threads is not None else get_default_threads()


def status(message: str) -> None:
    """Human progress line on stderr; stdout carries only the metadata block."""
    typer.echo(message, err=True)


def _render_param(value) -> str:
    if isinstance(value, list | tuple):
        return " ".join(_render_param(v) for v in value)
    if hasattr(value, "value"):
        return str(value.value)
    return str(value)


def provenance_command(ctx: typer.Context) -> str:
    """Canonical form of the running command, in declared parameter order.

    Built from parsed parameters rather than raw argv so the same invocation
    reads the same whatever the flag order.
    """
    parts = [ctx.command_path]
    for param in ctx.command.params:
        if param.name in NON_PROVENANCE_PARAMS:
            continue
        value = ctx.params.get(param.name)
        if value is None or value is False or value == []:
            continue
        flag = f"--{param.name.replace('_', '-')}"
        parts.append(flag if value is True else f"{flag} {_render_param(value)}")
    return " ".join(p for p in parts if p)


def make_writer(ctx: typer.Context, cfg: RunConfig, seed: int | None = None) -> ArtifactWriter:
    return ArtifactWriter(provenance_command(ctx), seed=seed, timestamp=cfg.header)


def resolve_graph(source: str) -> Graph:
    """An edge-list path if the file exists, otherwise a named graph ('petersen', 'hypercube(3)')."""
    path = Path(source)
    if path.is_file():
        return read_graph_file(path)
    return named_graph(source)


def read_table(path: Path, graph: Graph | None = None) -> RoutingTable:
    """Load a routing table file, validating it against `graph` when given."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise RoutingTableError(f"cannot read routing table {path}: {e}") from e
    return load_routing_table(text, graph)


def emit_metadata(values: dict[str, object], writer: ArtifactWriter | None = None) -> None:
    """Print the key=value block, followed by one digest line per written artifact."""
    block = dict(values)
    if writer is not None:
        for artifact in writer.written:
            block[f"sha256:{artifact.path.name}"] = artifact.sha256
    typer.echo(format_metadata(block))


def build_routing(
    graph: Graph,
    cfg: RunConfig,
    solver: SolverKind,
    local_restarts: int,
    steps: int,
    max_leaves: int,
) -> tuple[RoutingTable, LoadProfile, SolverKind, int]:
    """Route every demand of `graph` with the requested solver.

    Args:
        graph: Connected graph to route over
        cfg: Run configuration (demand mode, cap, seed, threads)
        solver: auto, exact, local or floyd
        local_restarts: Annealing restarts of the local solver
        steps: Annealing steps per restart
        max_leaves: Selection-space limit of the exact solver

    Returns:
        (table, load profile, solver actually used, number of free demand groups)
    """
    if solver == SolverKind.FLOYD:
        status("🧭 Computing Floyd-Warshall baseline...")
        table = floyd_routing(graph, cfg.demand_mode)
        return table, table_load_profile(table), SolverKind.FLOYD, 0

    status(f"🧮 Enumerating shortest paths ({cfg.demand_mode})...")
    model = build_model(graph, cfg.demand_mode, cfg.cap, cfg.threads)
    status(f"   {len(model.groups)} demands, {len(model.free_groups)} with a choice of path")

    schedule = AnnealSchedule()
    if solver == SolverKind.EXACT:
        solution, used = solve_exact(model, max_leaves), SolverKind.EXACT
    elif solver == SolverKind.LOCAL:
        solution = solve_local(model, cfg.seed, schedule, local_restarts, steps, cfg.threads)
        used = SolverKind.LOCAL
    else:
        solution, used = solve(model, cfg.seed, schedule, local_restarts, steps, cfg.threads, max_leaves)
    status(f"✅ Solved with the {used} solver, objective {solution.profile.objective}")
    return routing_table(model, solution.selection), solution.profile, used, len(model.free_groups)
