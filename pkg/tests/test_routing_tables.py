"""Tests for routing tables, the Floyd baseline and product composition."""

import networkx as nx
import pytest

from errors import FactorMismatchError, RoutingTableError, TableMismatchError
from product import cartesian_product, folded_power
from routing import (
    ComposeOrder,
    DemandMode,
    build_model,
    compose_power_routing,
    compose_product_routing,
    export_routing_table,
    floyd_routing,
    format_load_profile,
    graph_from_table,
    load_routing_table,
    require_balanced,
    routing_table,
    solve,
    solve_exact,
    table_load_profile,
    validate_routing_table,
)
from topology import named_graph


def balanced_table(graph, mode=DemandMode.UNORDERED):
    model = build_model(graph, mode)
    selection, _ = solve_exact(model)
    return routing_table(model, selection)


@pytest.fixture(scope="module")
def petersen_table(petersen):
    return balanced_table(petersen)


@pytest.fixture(scope="module")
def c4_table(c4):
    return balanced_table(c4)


def replace_line(text: str, prefix: str, new_line: str) -> str:
    lines = text.split("\n")
    index = next(i for i, line in enumerate(lines) if line.startswith(prefix))
    lines[index] = new_line
    return "\n".join(lines)


class TestRoutingTable:
    def test_petersen_entries(self, petersen_table):
        assert len(petersen_table) == 45
        assert petersen_table.demand_mode == DemandMode.UNORDERED

    def test_export_format(self, c4_table):
        text = export_routing_table(c4_table)
        lines = text.splitlines()
        assert lines[0] == "ROUTES unordered 4 6"
        assert "0 2 2 0 1 2" in lines
        assert "1 3 2 1 0 3" in lines

    def test_export_then_load(self, petersen, petersen_table):
        assert load_routing_table(export_routing_table(petersen_table), petersen) == petersen_table

    def test_comment_lines_skipped(self, c4, c4_table):
        text = "# command: nestnet route\n" + export_routing_table(c4_table)
        assert load_routing_table(text, c4) == c4_table

    def test_reverse_direction(self, c4_table):
        assert c4_table.path(0, 2) == (0, 1, 2)
        assert c4_table.path(2, 0) == (2, 1, 0)

    def test_next_hop(self, c4_table):
        assert c4_table.next_hop(0, 0, 2) == 1
        assert c4_table.next_hop(1, 0, 2) == 2
        assert c4_table.next_hop(2, 2, 0) == 1

    def test_non_shortest_path_rejected(self, petersen, petersen_table):
        nxg = petersen.to_networkx()
        dist = petersen.distance_matrix()
        target = next(t for t in range(1, 10) if dist[0, t] == 2)
        detour = next(p for p in nx.all_simple_paths(nxg, 0, target, cutoff=3) if len(p) == 4)
        text = replace_line(
            export_routing_table(petersen_table),
            f"0 {target} ",
            " ".join(str(x) for x in (0, target, 3, *detour)),
        )
        with pytest.raises(RoutingTableError, match="has length 3"):
            load_routing_table(text, petersen)

    def test_non_adjacent_hop_rejected(self, c4, c4_table):
        text = replace_line(export_routing_table(c4_table), "0 2 ", "0 2 1 0 2")
        table = load_routing_table(text)
        with pytest.raises(RoutingTableError, match="not adjacent"):
            validate_routing_table(table, c4)

    def test_missing_demand_rejected(self, c4, c4_table):
        lines = export_routing_table(c4_table).splitlines()
        kept = [line for line in lines[1:] if not line.startswith("1 3 ")]
        text = "\n".join(["ROUTES unordered 4 5", *kept]) + "\n"
        with pytest.raises(RoutingTableError, match="missing demand"):
            load_routing_table(text, c4)

    def test_count_mismatch_rejected(self, c4_table):
        text = export_routing_table(c4_table).replace("ROUTES unordered 4 6", "ROUTES unordered 4 7")
        with pytest.raises(RoutingTableError):
            load_routing_table(text)

    def test_out_of_order_rejected(self, c4_table):
        lines = export_routing_table(c4_table).splitlines()
        text = "\n".join([lines[0], lines[2], lines[1], *lines[3:]]) + "\n"
        with pytest.raises(RoutingTableError, match="out of order"):
            load_routing_table(text)

    def test_bad_header(self):
        with pytest.raises(RoutingTableError):
            load_routing_table("PATHS unordered 4 6\n")
        with pytest.raises(RoutingTableError):
            load_routing_table("ROUTES sideways 4 6\n")

    def test_non_integer_token_reports_line(self, c4_table):
        text = export_routing_table(c4_table).replace("0 2 2 0 1 2", "0 2 2 0 x 2")
        with pytest.raises(RoutingTableError) as exc:
            load_routing_table(text)
        assert exc.value.line == 3

    def test_size_mismatch(self, c4_table, petersen):
        with pytest.raises(TableMismatchError):
            validate_routing_table(c4_table, petersen)

    def test_load_profile_text(self, c4_table):
        assert format_load_profile(table_load_profile(c4_table)) == "0 1\n1 1\n2 0\n3 0\nobjective 1/1\n"

    def test_graph_from_table(self, petersen, petersen_table):
        recovered = graph_from_table(petersen_table)
        assert recovered.adjacency == petersen.adjacency


class TestFloyd:
    def test_c4_unordered(self, c4):
        table = floyd_routing(c4)
        profile = table_load_profile(table)
        assert profile.d == (1, 1, 0, 0)
        assert profile.objective == 1

    def test_c4_ordered_is_unbalanced(self, c4, c4_ordered_solution):
        profile = table_load_profile(floyd_routing(c4, DemandMode.ORDERED))
        assert profile.d == (2, 2, 0, 0)
        assert profile.objective == 4
        _, (_, balanced) = c4_ordered_solution
        assert balanced.objective < profile.objective

    def test_petersen_matches_balanced(self, petersen, petersen_table):
        assert floyd_routing(petersen) == petersen_table

    def test_paths_are_valid(self, levi, cube):
        validate_routing_table(floyd_routing(levi), levi)
        validate_routing_table(floyd_routing(cube, DemandMode.ORDERED), cube)


class TestCompose:
    def test_complete_squared(self, k3):
        base = balanced_table(k3, DemandMode.ORDERED)
        pg = cartesian_product(k3, k3)
        table = compose_product_routing(base, base, pg)
        validate_routing_table(table, pg.graph)
        profile = table_load_profile(table)
        assert profile.d == (4,) * 9
        assert profile.objective == 0

    def test_c4_squared(self, c4, c4_ordered_solution):
        model, (selection, _) = c4_ordered_solution
        base = routing_table(model, selection)
        pg = cartesian_product(c4, c4)
        table = compose_product_routing(base, base, pg)
        validate_routing_table(table, pg.graph)
        assert table_load_profile(table).d == (17,) * 16

    def test_petersen_squared(self, petersen, petersen_squared):
        base = balanced_table(petersen, DemandMode.ORDERED)
        table = compose_product_routing(base, base, petersen_squared)
        profile = table_load_profile(table)
        assert len(table) == 100 * 99
        assert profile.d == (201,) * 100
        assert profile.objective == 0

    @pytest.mark.parametrize("order", list(ComposeOrder))
    def test_mixed_factors_are_shortest(self, c4, petersen, c4_ordered_solution, order):
        model, (selection, _) = c4_ordered_solution
        r1 = routing_table(model, selection)
        r2 = balanced_table(petersen, DemandMode.ORDERED)
        pg = cartesian_product(c4, petersen)
        table = compose_product_routing(r1, r2, pg, order)
        validate_routing_table(table, pg.graph)
        assert table_load_profile(table).objective == 0

    def test_single_factor_demands_reuse_factor_paths(self, c4, petersen, c4_ordered_solution):
        model, (selection, _) = c4_ordered_solution
        r1 = routing_table(model, selection)
        r2 = balanced_table(petersen, DemandMode.ORDERED)
        pg = cartesian_product(c4, petersen)
        table = compose_product_routing(r1, r2, pg)
        for a in range(4):
            for v1, v2 in ((0, 7), (3, 5), (9, 1)):
                lifted = tuple(pg.id_of((a, y)) for y in r2.path(v1, v2))
                assert table.path(pg.id_of((a, v1)), pg.id_of((a, v2))) == lifted
        for b in range(10):
            lifted = tuple(pg.id_of((x, b)) for x in r1.path(0, 2))
            assert table.path(pg.id_of((0, b)), pg.id_of((2, b))) == lifted

    def test_load_formula_with_unbalanced_factor(self, c4, k3):
        r1 = floyd_routing(c4, DemandMode.ORDERED)
        r2 = balanced_table(k3, DemandMode.ORDERED)
        pg = cartesian_product(c4, k3)
        profile = table_load_profile(compose_product_routing(r1, r2, pg))
        d1 = table_load_profile(r1).d
        d2 = table_load_profile(r2).d
        for v in range(pg.n):
            a, b = pg.label_of(v)
            assert profile.d[v] == d1[a] * 3 + d2[b] * 4 + 3 * 2

    def test_rejects_unordered_tables(self, k3):
        pg = cartesian_product(k3, k3)
        unordered = balanced_table(k3)
        ordered = balanced_table(k3, DemandMode.ORDERED)
        with pytest.raises(FactorMismatchError):
            compose_product_routing(unordered, ordered, pg)
        with pytest.raises(FactorMismatchError):
            compose_product_routing(ordered, unordered, pg)

    def test_rejects_size_mismatch(self, k3, c4):
        pg = cartesian_product(k3, c4)
        r = balanced_table(k3, DemandMode.ORDERED)
        with pytest.raises(FactorMismatchError):
            compose_product_routing(r, r, pg)

    def test_rejects_table_of_another_factor(self, c4, k4, c4_ordered_solution):
        model, (selection, _) = c4_ordered_solution
        c4_table = routing_table(model, selection)
        k4_table = balanced_table(k4, DemandMode.ORDERED)
        pg = cartesian_product(c4, c4)
        with pytest.raises(FactorMismatchError, match="second table"):
            compose_product_routing(c4_table, k4_table, pg)
        with pytest.raises(FactorMismatchError, match="first table"):
            compose_product_routing(k4_table, c4_table, pg)

    def test_power_rejects_table_of_another_base(self, c4, k4):
        k4_table = balanced_table(k4, DemandMode.ORDERED)
        with pytest.raises(FactorMismatchError, match="base table"):
            compose_power_routing(k4_table, folded_power(c4, 2))

    def test_power(self, k3):
        base = balanced_table(k3, DemandMode.ORDERED)
        pg = folded_power(k3, 3)
        table = compose_power_routing(base, pg)
        validate_routing_table(table, pg.graph)
        assert table_load_profile(table).d == (28,) * 27
        pg2 = folded_power(k3, 2)
        stepwise = compose_product_routing(compose_product_routing(base, base, pg2), base, pg)
        assert table == stepwise

    def test_power_rejects_other_factor_sizes(self, k3, c4):
        base = balanced_table(k3, DemandMode.ORDERED)
        with pytest.raises(FactorMismatchError):
            compose_power_routing(base, cartesian_product(k3, c4))

    def test_named_power_balances(self):
        c5 = named_graph("cycle(5)")
        base = balanced_table(c5, DemandMode.ORDERED)
        table = compose_power_routing(base, folded_power(c5, 2))
        assert table_load_profile(table).objective == 0


@pytest.mark.slow
class TestSearchedProduct:
    def test_searched_sixteen_three_squared_balances(self, searched_16_3):
        model = build_model(searched_16_3, DemandMode.ORDERED, threads=8)
        solution, kind = solve(model, seed=1, threads=8)
        require_balanced(solution.profile, f"searched_16_3 ordered solver={kind}")
        pg = folded_power(searched_16_3, 2)
        table = compose_power_routing(routing_table(model, solution.selection), pg)
        profile = table_load_profile(table)
        assert pg.n == 256
        assert len(table) == 256 * 255
        assert profile.objective == 0
