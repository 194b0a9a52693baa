#!/usr/bin/env python3
"""
Nested Network Workbench
Build base graphs, nest them into Cartesian products, balance their routing
and compare the result against a Floyd-Warshall baseline.
"""

import sys
from collections.abc import Sequence
from pathlib import Path

import typer
from pydantic import ValidationError

from cli.config import RunConfig
from cli.helpers import (
    build_routing,
    configure_logging,
    emit_metadata,
    make_writer,
    read_table,
    resolve_graph,
    resolve_threads,
    status,
)
from errors import WorkbenchError
from product import folded_power, folded_scaling, nested_product, save_labels, verify_product_properties
from routing import (
    DEFAULT_PATH_CAP,
    EXACT_LEAF_LIMIT,
    ComposeOrder,
    DemandMode,
    SolverKind,
    compose_power_routing,
    compose_product_routing,
    export_routing_table,
    format_load_profile,
    graph_from_table,
    require_balanced,
    table_load_profile,
    validate_routing_table,
)
from routing.solvers import DEFAULT_LOCAL_RESTARTS, DEFAULT_LOCAL_STEPS
from search import SearchConfig, moore_mpl_bound, random_regular, search_optimal
from simulation import (
    TrafficSpec,
    alltoall_curve,
    compare_report,
    link_load_frame,
    node_load_frame,
    simulate,
)
from simulation.traffic import DEFAULT_HOP_LATENCY
from topology import BisectionMode, graph_metrics, is_regular, named_graph, save_graph
from utils import format_decimal, format_rational

app = typer.Typer(help="Nested Network Workbench - optimal base graphs, Cartesian products and balanced routing.")

THREADS_OPTION = typer.Option(None, "--threads", min=1, help="Worker threads (default NESTNET_THREADS or 1)")
VERBOSE_OPTION = typer.Option(False, "--verbose", "-v", help="Log progress to stderr")
NO_HEADER_OPTION = typer.Option(False, "--no-header", help="Omit the timestamp line from artifact headers")

PRODUCT_VERIFY_LIMIT = 4096
DEFAULT_MESSAGE_SIZES = "1,10,100,1000,10000"
# click reports usage errors with this code; the workbench reports them as 1
USAGE_EXIT_CODE = 2


def _config(subcommand: str, threads: int | None, verbose: bool, no_header: bool, **fields) -> RunConfig:
    configure_logging(verbose)
    return RunConfig(
        subcommand=subcommand,
        threads=resolve_threads(threads),
        verbose=verbose,
        header=not no_header,
        **fields,
    )


def _traffic(capacity: float, flow: float, latency: float) -> TrafficSpec:
    return TrafficSpec(link_capacity=capacity, flow=flow, per_hop_latency=latency)


@app.command("gen")
def gen_command(
    ctx: typer.Context,
    name: str = typer.Option(..., "--name", help="petersen, heawood, levi, hypercube(m), complete(m), cycle(m) or random"),
    out: Path = typer.Option(..., "--out", help="Edge-list output path"),
    m: int = typer.Option(None, "--m", help="Family parameter when not given inline"),
    n: int = typer.Option(None, "--n", help="Vertex count (random only)"),
    k: int = typer.Option(None, "--k", help="Degree (random only)"),
    seed: int = typer.Option(1, "--seed", min=0, help="Seed (random only)"),
    threads: int = THREADS_OPTION,
    verbose: bool = VERBOSE_OPTION,
    no_header: bool = NO_HEADER_OPTION,
):
    """Generate a named or random regular graph as an edge list.

    Example usage:
        nestnet gen --name petersen --out p.g
        nestnet gen --name "hypercube(4)" --out q4.g
        nestnet gen --name random --n 16 --k 3 --seed 7 --out r.g
    """
    cfg = _config("gen", threads, verbose, no_header, output=out, seed=seed)
    randomized = name.strip().lower() == "random"
    if randomized:
        if n is None or k is None:
            raise typer.BadParameter("random graphs need --n and --k", param_hint="--name")
        graph = random_regular(n, k, cfg.seed)
    else:
        graph = named_graph(name, m)

    status(f"🕸️  Generated {graph.name}: {graph.n} vertices, {graph.num_edges} edges")
    writer = make_writer(ctx, cfg, cfg.seed)
    writer.write(out, save_graph(graph))
    degree = is_regular(graph)
    emit_metadata(
        {"graph": graph.name, "n": graph.n, "k": degree if degree is not None else -1, "edges": graph.num_edges},
        writer,
    )


@app.command("metrics")
def metrics_command(
    graph: str = typer.Argument(..., help="Edge-list file or graph name"),
    bisection: BisectionMode = typer.Option(BisectionMode.AUTO, "--bisection", help="auto, exact or heuristic"),
    restarts: int = typer.Option(32, "--restarts", min=1, help="Kernighan-Lin restarts (heuristic bisection)"),
    seed: int = typer.Option(1, "--seed", min=0, help="Seed for heuristic bisection"),
    threads: int = THREADS_OPTION,
    verbose: bool = VERBOSE_OPTION,
    no_header: bool = NO_HEADER_OPTION,
):
    """Print diameter, mean path length and bisection width.

    Example usage:
        nestnet metrics p.g
        nestnet metrics levi --bisection heuristic --restarts 64
    """
    cfg = _config("metrics", threads, verbose, no_header, seed=seed)
    g = resolve_graph(graph)
    result = graph_metrics(g, bisection, restarts=restarts, seed=cfg.seed, threads=cfg.threads)
    emit_metadata(
        {
            "graph": g.name,
            "n": result.n,
            "k": result.degree if result.degree is not None else -1,
            "D": result.diameter,
            "MPL": format_decimal(result.mpl),
            "MPL_exact": format_rational(result.mpl),
            "BW": result.bisection_width,
            "BW_exactness": result.bisection_exactness,
        }
    )


@app.command("search")
def search_command(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", help="Vertex count (3..64)"),
    k: int = typer.Option(..., "--k", help="Degree"),
    out: Path = typer.Option(..., "--out", help="Edge-list output path"),
    budget: int = typer.Option(2_000_000, "--budget", help="Total candidate evaluations over all restarts"),
    restarts: int = typer.Option(8, "--restarts", help="Independent annealing restarts"),
    seed: int = typer.Option(1, "--seed", min=0, help="Base seed; restart r uses seed XOR r"),
    target_mpl: str = typer.Option(None, "--target-mpl", help="Stop once this MPL is reached (e.g. 7/4)"),
    threads: int = THREADS_OPTION,
    verbose: bool = VERBOSE_OPTION,
    no_header: bool = NO_HEADER_OPTION,
):
    """Search for a minimal-MPL (n,k)-regular graph by simulated annealing.

    Example usage:
        nestnet search --n 16 --k 3 --seed 1 --out g.g
        nestnet search --n 16 --k 4 --target-mpl 7/4 --out g16_4.g
    """
    cfg = _config("search", threads, verbose, no_header, output=out, seed=seed, budget=budget, restarts=restarts)
    search_cfg = SearchConfig(
        n=n,
        k=k,
        budget=cfg.budget,
        restarts=cfg.restarts,
        seed=cfg.seed,
        target_mpl=target_mpl or None,
    )
    status(f"🔎 Searching ({n},{k}) with {cfg.restarts} restarts, budget {cfg.budget}...")
    result = search_optimal(search_cfg, threads=cfg.threads)
    status(f"✅ Best MPL {format_rational(result.mpl)} from restart {result.restart_index}")

    writer = make_writer(ctx, cfg, cfg.seed)
    writer.write(out, save_graph(result.graph))
    emit_metadata(
        {
            "n": n,
            "k": k,
            "MPL": format_decimal(result.mpl),
            "MPL_exact": format_rational(result.mpl),
            "D": result.diameter,
            "moore_bound": format_rational(moore_mpl_bound(n, k)),
            "hit_lower_bound": result.hit_lower_bound,
            "hit_target": result.hit_target,
            "evaluations": result.evaluations_used,
            "restart_index": result.restart_index,
            "restart_seed": result.restart_seed,
            "seed": cfg.seed,
        },
        writer,
    )


@app.command("product")
def product_command(
    ctx: typer.Context,
    factors: list[str] = typer.Argument(..., help="Factor edge-list files or graph names"),
    out: Path = typer.Option(..., "--out", help="Edge-list output path"),
    power: int = typer.Option(1, "--power", min=1, help="Fold a single factor this many times"),
    labels: Path = typer.Option(None, "--labels", help="Label map path (default: <out>.labels)"),
    verify: bool = typer.Option(True, "--verify/--no-verify", help="Check the product laws by BFS"),
    threads: int = THREADS_OPTION,
    verbose: bool = VERBOSE_OPTION,
    no_header: bool = NO_HEADER_OPTION,
):
    """Build a (nested) Cartesian product and its label map.

    Example usage:
        nestnet product petersen petersen --out pp.g
        nestnet product heawood --power 2 --out h2.g
        nestnet product g32_4.g g8_3.g --out mixed.g
    """
    cfg = _config("product", threads, verbose, no_header, output=out)
    graphs = [resolve_graph(f) for f in factors]
    if power > 1:
        if len(graphs) != 1:
            raise typer.BadParameter("--power folds exactly one factor", param_hint="--power")
        pg = folded_power(graphs[0], power)
    else:
        pg = nested_product(graphs)
    status(f"🧱 Built product of {len(pg.factors)} factors: {pg.n} vertices, {pg.graph.num_edges} edges")

    values: dict[str, object] = {"n": pg.n, "factors": len(pg.factors), "radices": ",".join(map(str, pg.radices))}
    degree = is_regular(pg.graph)
    values["k"] = degree if degree is not None else -1
    if verify and pg.n <= PRODUCT_VERIFY_LIMIT:
        report = verify_product_properties(pg)
        values.update(D_expected=report.expected_diameter, D=report.measured_diameter, laws_ok=report.ok)
        if not report.ok:
            for violation in report.violations:
                status(f"❌ {violation}")
    elif verify:
        status(f"⏭️  Skipping law verification above {PRODUCT_VERIFY_LIMIT} vertices")

    writer = make_writer(ctx, cfg, cfg.seed)
    writer.write(out, save_graph(pg.graph))
    writer.write(labels or out.with_suffix(".labels"), save_labels(pg))
    emit_metadata(values, writer)


@app.command("route")
def route_command(
    ctx: typer.Context,
    graph: str = typer.Argument(..., help="Edge-list file or graph name"),
    out: Path = typer.Option(..., "--out", help="Routing-table output path"),
    mode: DemandMode = typer.Option(DemandMode.UNORDERED, "--mode", help="unordered or ordered demands"),
    solver: SolverKind = typer.Option(SolverKind.AUTO, "--solver", help="auto, exact, local or floyd"),
    cap: int = typer.Option(DEFAULT_PATH_CAP, "--cap", help="Maximum shortest paths per demand"),
    seed: int = typer.Option(1, "--seed", min=0, help="Seed for the local solver"),
    restarts: int = typer.Option(DEFAULT_LOCAL_RESTARTS, "--restarts", min=0, help="Local-solver annealing restarts"),
    steps: int = typer.Option(DEFAULT_LOCAL_STEPS, "--steps", min=1, help="Annealing steps per restart"),
    max_leaves: int = typer.Option(EXACT_LEAF_LIMIT, "--max-leaves", min=1, help="Exact-solver search-space limit"),
    loads: Path = typer.Option(None, "--loads", help="Also write the per-node load profile here"),
    max_band: int = typer.Option(None, "--max-band", min=0, help="Fail (exit 2) if max - min load exceeds this"),
    threads: int = THREADS_OPTION,
    verbose: bool = VERBOSE_OPTION,
    no_header: bool = NO_HEADER_OPTION,
):
    """Compute a load-balanced (or Floyd baseline) routing table.

    Example usage:
        nestnet route p.g --mode unordered --out p.rt
        nestnet route p.g --solver floyd --out p.floyd.rt
        nestnet route g16_3.g --mode ordered --solver local --seed 3 --out g.rt
        nestnet route g32_3.g --solver local --max-band 0 --out g.rt
    """
    cfg = _config("route", threads, verbose, no_header, output=out, seed=seed, demand_mode=mode, cap=cap)
    g = resolve_graph(graph)
    table, profile, used, free_groups = build_routing(g, cfg, solver, restarts, steps, max_leaves)

    writer = make_writer(ctx, cfg, cfg.seed)
    writer.write(out, export_routing_table(table))
    if loads is not None:
        writer.write(loads, format_load_profile(profile))
    emit_metadata(
        {
            "graph": g.name,
            "mode": cfg.demand_mode,
            "solver": used,
            "demands": len(table),
            "free_groups": free_groups,
            "objective": format_rational(profile.objective),
            "max_load": profile.max_load,
            "min_load": profile.min_load,
            "band": profile.band,
        },
        writer,
    )
    if max_band is not None:
        instance = f"{g.name or graph} (n={g.n}, mode={cfg.demand_mode}, solver={used}, seed={cfg.seed})"
        require_balanced(profile, instance, max_band)


@app.command("compose")
def compose_command(
    ctx: typer.Context,
    table1: Path = typer.Argument(..., exists=True, dir_okay=False, help="Ordered table over the first factor"),
    table2: Path = typer.Argument(None, exists=True, dir_okay=False, help="Ordered table over the second factor"),
    graph1: str = typer.Option(..., "--graph1", help="First factor (file or name)"),
    graph2: str = typer.Option(None, "--graph2", help="Second factor (file or name)"),
    power: int = typer.Option(None, "--power", min=2, help="Compose TABLE1 with itself over a folded power"),
    order: ComposeOrder = typer.Option(ComposeOrder.G1_FIRST, "--order", help="Leg order for mixed demands"),
    out: Path = typer.Option(..., "--out", help="Routing-table output path"),
    loads: Path = typer.Option(None, "--loads", help="Also write the per-node load profile here"),
    validate: bool = typer.Option(True, "--validate/--no-validate", help="Check every composed path against the product"),
    threads: int = THREADS_OPTION,
    verbose: bool = VERBOSE_OPTION,
    no_header: bool = NO_HEADER_OPTION,
):
    """Compose factor routing tables into a routing table for their product.

    Example usage:
        nestnet compose k3.rt k3.rt --graph1 "complete(3)" --graph2 "complete(3)" --out k3k3.rt
        nestnet compose p.rt --graph1 petersen --power 2 --out pp.rt
    """
    cfg = _config("compose", threads, verbose, no_header, output=out, demand_mode=DemandMode.ORDERED)
    g1 = resolve_graph(graph1)
    r1 = read_table(table1, g1)
    if power is not None:
        pg = folded_power(g1, power)
        table = compose_power_routing(r1, pg, order)
    else:
        if table2 is None or graph2 is None:
            raise typer.BadParameter("give TABLE2 and --graph2, or --power", param_hint="TABLE2")
        g2 = resolve_graph(graph2)
        r2 = read_table(table2, g2)
        pg = nested_product([g1, g2])
        table = compose_product_routing(r1, r2, pg, order)
    status(f"🧩 Composed {len(table)} demands over {pg.n} vertices")
    if validate:
        validate_routing_table(table, pg.graph)

    profile = table_load_profile(table)
    writer = make_writer(ctx, cfg, cfg.seed)
    writer.write(out, export_routing_table(table))
    if loads is not None:
        writer.write(loads, format_load_profile(profile))
    emit_metadata(
        {
            "n": pg.n,
            "mode": table.demand_mode,
            "order": order,
            "demands": len(table),
            "objective": format_rational(profile.objective),
            "max_load": profile.max_load,
            "min_load": profile.min_load,
            "band": profile.band,
        },
        writer,
    )


@app.command("simulate")
def simulate_command(
    ctx: typer.Context,
    table: Path = typer.Argument(..., exists=True, dir_okay=False, help="Routing table"),
    graph: str = typer.Option(None, "--graph", help="Graph (file or name); recovered from the table if omitted"),
    capacity: float = typer.Option(1.0, "--capacity", help="Link capacity (units/time)"),
    flow: float = typer.Option(1.0, "--flow", help="Flow per demand"),
    latency: float = typer.Option(DEFAULT_HOP_LATENCY, "--latency", help="Per-hop latency (s)"),
    message_size: float = typer.Option(1.0, "--message-size", min=0.0, help="Message size for the all-to-all estimate"),
    nodes_csv: Path = typer.Option(None, "--nodes-csv", help="Write per-node loads (id,load)"),
    links_csv: Path = typer.Option(None, "--links-csv", help="Write per-link loads (id,src,dst,load)"),
    curve_csv: Path = typer.Option(None, "--curve-csv", help="Write the all-to-all estimate sweep"),
    sizes: str = typer.Option(DEFAULT_MESSAGE_SIZES, "--sizes", help="Comma-separated message sizes for --curve-csv"),
    threads: int = THREADS_OPTION,
    verbose: bool = VERBOSE_OPTION,
    no_header: bool = NO_HEADER_OPTION,
):
    """Evaluate a routing table under uniform all-to-all traffic.

    Example usage:
        nestnet simulate p.rt
        nestnet simulate g.rt --graph g.g --nodes-csv nodes.csv --links-csv links.csv
    """
    cfg = _config("simulate", threads, verbose, no_header, inputs=(table,))
    spec = _traffic(capacity, flow, latency)
    rt = read_table(table)
    g = resolve_graph(graph) if graph else graph_from_table(rt, name=table.stem)
    validate_routing_table(rt, g)
    report = simulate(rt, g, spec, message_size, cfg.threads)

    writer = make_writer(ctx, cfg, cfg.seed)
    if nodes_csv is not None:
        writer.write(nodes_csv, node_load_frame(report).to_csv(index=False, lineterminator="\n"))
    if links_csv is not None:
        writer.write(links_csv, link_load_frame(report).to_csv(index=False, lineterminator="\n"))
    if curve_csv is not None:
        try:
            message_sizes = [float(s) for s in sizes.split(",") if s.strip()]
        except ValueError as e:
            raise typer.BadParameter(f"cannot parse message sizes '{sizes}'", param_hint="--sizes") from e
        if any(size < 0 for size in message_sizes):
            raise typer.BadParameter(f"message sizes must be non-negative, got '{sizes}'", param_hint="--sizes")
        curve = alltoall_curve(rt, g, message_sizes, spec, cfg.threads)
        writer.write(curve_csv, curve.to_csv(index=False, lineterminator="\n"))
    emit_metadata({"n": rt.n, "mode": rt.demand_mode, "demands": len(rt), **report.metadata()}, writer)


@app.command("compare")
def compare_command(
    table_a: Path = typer.Argument(..., exists=True, dir_okay=False, help="First routing table"),
    table_b: Path = typer.Argument(..., exists=True, dir_okay=False, help="Second routing table"),
    graph: str = typer.Option(None, "--graph", help="Graph (file or name); recovered from the tables if omitted"),
    labels: str = typer.Option("a,b", "--labels", help="Comma-separated names for the two tables"),
    capacity: float = typer.Option(1.0, "--capacity", help="Link capacity (units/time)"),
    flow: float = typer.Option(1.0, "--flow", help="Flow per demand"),
    latency: float = typer.Option(DEFAULT_HOP_LATENCY, "--latency", help="Per-hop latency (s)"),
    message_size: float = typer.Option(1.0, "--message-size", min=0.0, help="Message size for the all-to-all estimate"),
    threads: int = THREADS_OPTION,
    verbose: bool = VERBOSE_OPTION,
    no_header: bool = NO_HEADER_OPTION,
):
    """Compare two routing tables side by side and mark the winner per metric.

    Example usage:
        nestnet compare p.rt p.floyd.rt --labels balanced,floyd
    """
    cfg = _config("compare", threads, verbose, no_header, inputs=(table_a, table_b))
    names = tuple(s.strip() for s in labels.split(","))
    if len(names) != 2:
        raise typer.BadParameter("--labels needs exactly two names", param_hint="--labels")
    if names[0] == names[1]:
        raise typer.BadParameter(f"--labels needs two different names, got {labels!r}", param_hint="--labels")
    rt_a, rt_b = read_table(table_a), read_table(table_b)
    g = resolve_graph(graph) if graph else graph_from_table(rt_a, name=table_a.stem)
    validate_routing_table(rt_a, g)
    validate_routing_table(rt_b, g)
    comparison = compare_report(rt_a, rt_b, g, _traffic(capacity, flow, latency), names, message_size, cfg.threads)
    typer.echo(comparison.render())
    typer.echo()
    emit_metadata(comparison.metadata())


@app.command("scaling")
def scaling_command(
    ctx: typer.Context,
    base: list[str] = typer.Option(None, "--base", help="Base graphs (files or names); default petersen, heawood, levi"),
    alpha_max: int = typer.Option(4, "--alpha-max", min=1, help="Largest fold count"),
    verify_limit: int = typer.Option(4096, "--verify-limit", min=0, help="Confirm diameters by BFS up to this size"),
    out: Path = typer.Option(None, "--out", help="Write the table as CSV"),
    threads: int = THREADS_OPTION,
    verbose: bool = VERBOSE_OPTION,
    no_header: bool = NO_HEADER_OPTION,
):
    """Tabulate size, diameter and degree of folded networks.

    Example usage:
        nestnet scaling --alpha-max 5
        nestnet scaling --base "hypercube(1)" --base petersen --out scaling.csv
    """
    cfg = _config("scaling", threads, verbose, no_header, output=out)
    sources = base or ["petersen", "heawood", "levi"]
    bases = {}
    for source in sources:
        g = resolve_graph(source)
        bases[g.name or source] = g
    df = folded_scaling(bases, alpha_max, verify_limit)
    typer.echo(df.to_string(index=False))
    if out is not None:
        writer = make_writer(ctx, cfg, cfg.seed)
        writer.write(out, df.to_csv(index=False, lineterminator="\n"))
        typer.echo()
        emit_metadata({"rows": len(df)}, writer)


def run(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and map failures to exit codes: 1 usage or bad input, 2 domain error."""
    try:
        app(args=list(argv) if argv is not None else None, prog_name="nestnet")
    except SystemExit as e:
        code = e.code if isinstance(e.code, int) else int(e.code is not None)
        return 1 if code == USAGE_EXIT_CODE else code
    except ValidationError as e:
        typer.echo(f"❌ Invalid configuration: {e}", err=True)
        return 1
    except WorkbenchError as e:
        typer.echo(f"❌ {e}", err=True)
        return 2
    except ValueError as e:
        typer.echo(f"❌ Invalid input: {e}", err=True)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
