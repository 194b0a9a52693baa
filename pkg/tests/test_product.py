"""Tests for Cartesian products, folded powers, label maps and scaling tables."""

from itertools import product as iter_product

import networkx as nx
import numpy as np
import pytest

from errors import DisconnectedGraphError, GraphFormatError, GraphSizeError
from product import (
    ProductGraph,
    cartesian_product,
    check_labels,
    commutes_by_relabeling,
    folded_power,
    folded_scaling,
    load_labels,
    nested_product,
    save_labels,
    verify_product_properties,
)
from search import random_regular
from topology import Graph, diameter, hypercube, is_regular, named_graph


def _random_factor_pairs(count: int, seed: int):
    rng = np.random.default_rng(seed)
    pairs = []
    while len(pairs) < count:
        factors = []
        for _ in range(2):
            n = int(rng.integers(4, 17))
            k = int(rng.integers(2, min(5, n - 1) + 1))
            if (n * k) % 2:
                k -= 1
            factors.append(random_regular(n, k, seed=int(rng.integers(1 << 32))))
        pairs.append(tuple(factors))
    return pairs


class TestLabels:
    def test_factor_zero_is_most_significant(self):
        pg = nested_product([named_graph("complete(3)"), named_graph("cycle(4)")])
        assert pg.label_of(5) == (1, 1)
        assert pg.id_of((2, 3)) == 11
        assert pg.split(7) == (1, 3)
        assert pg.join(1, 3) == 7

    def test_label_bijection(self):
        pg = nested_product([named_graph("complete(3)"), named_graph("cycle(4)"), named_graph("complete(2)")])
        assert pg.radices == (3, 4, 2)
        assert [pg.id_of(pg.label_of(v)) for v in range(pg.n)] == list(range(24))
        assert sorted(pg.label_of(v) for v in range(pg.n)) == list(iter_product(range(3), range(4), range(2)))

    def test_label_out_of_range(self):
        pg = nested_product([named_graph("complete(3)"), named_graph("cycle(4)")])
        with pytest.raises(ValueError):
            pg.id_of((3, 0))
        with pytest.raises(ValueError):
            pg.label_of(12)
        with pytest.raises(ValueError):
            pg.id_of((1,))

    def test_adjacency_definition(self):
        factors = [named_graph("cycle(5)"), named_graph("complete(3)"), named_graph("complete(2)")]
        pg = nested_product(factors)
        for u in range(pg.n):
            for v in range(pg.n):
                a, b = pg.label_of(u), pg.label_of(v)
                differing = [i for i in range(3) if a[i] != b[i]]
                expected = len(differing) == 1 and factors[differing[0]].has_edge(a[differing[0]], b[differing[0]])
                assert pg.graph.has_edge(u, v) == expected

    def test_label_map_round_trip(self):
        pg = cartesian_product(named_graph("complete(2)"), named_graph("complete(2)"))
        text = save_labels(pg)
        assert text == "# radices 2 2\n0 0 0\n1 0 1\n2 1 0\n3 1 1\n"
        labels = load_labels(text)
        assert labels[2] == (1, 0)
        assert check_labels(pg, labels) == []

    def test_label_map_mismatch_reported(self):
        pg = cartesian_product(named_graph("complete(2)"), named_graph("complete(2)"))
        problems = check_labels(pg, {0: (0, 0), 1: (1, 0)})
        assert any("covers 2 ids" in p for p in problems)
        assert any("id 1" in p for p in problems)

    def test_label_map_ragged_line(self):
        with pytest.raises(GraphFormatError, match="line 3"):
            load_labels("0 0 0\n1 0 1\n2 1\n")


class TestProducts:
    def test_k2_squared_is_c4(self):
        pg = cartesian_product(named_graph("complete(2)"), named_graph("complete(2)"))
        assert nx.is_isomorphic(pg.graph.to_networkx(), nx.cycle_graph(4))
        assert (pg.n, is_regular(pg.graph), diameter(pg.graph)) == (4, 2, 2)

    def test_cube_times_k4(self):
        pg = cartesian_product(named_graph("hypercube(3)"), named_graph("complete(4)"))
        assert pg.n == 32
        assert is_regular(pg.graph) == 6

    def test_petersen_squared(self, petersen_squared):
        assert (petersen_squared.n, is_regular(petersen_squared.graph)) == (100, 6)
        report = verify_product_properties(petersen_squared)
        assert report.ok
        assert report.measured_diameter == report.expected_diameter == 4

    def test_k2_k2_laws(self):
        report = verify_product_properties(cartesian_product(named_graph("complete(2)"), named_graph("complete(2)")))
        assert report.ok and report.measured_diameter == 2

    def test_associativity(self, k3, c4, c5):
        left = nested_product([k3, c4, c5])
        right = cartesian_product(k3, cartesian_product(c4, c5))
        assert left.graph == right.graph
        assert left.factors == right.factors

    def test_product_accepts_product_operands(self, k3, c4):
        pg = cartesian_product(cartesian_product(k3, c4), k3)
        assert pg.radices == (3, 4, 3)

    @pytest.mark.parametrize("pair_index", range(20))
    def test_laws_on_random_pairs(self, pair_index):
        g1, g2 = _random_factor_pairs(20, seed=2024)[pair_index]
        pg = cartesian_product(g1, g2)
        report = verify_product_properties(pg)
        assert report.violations == []
        assert report.size_ok and report.degree_ok and report.diameter_ok and report.commutative_ok

    def test_commutes_by_relabeling(self, c4, c5):
        assert commutes_by_relabeling(cartesian_product(c4, c5))

    def test_broken_product_reported(self):
        fake = ProductGraph(graph=named_graph("cycle(4)"), factors=(named_graph("complete(2)"), named_graph("complete(3)")))
        report = verify_product_properties(fake)
        assert not report.ok
        assert not report.size_ok and not report.degree_ok and not report.commutative_ok

    def test_size_guard(self):
        with pytest.raises(GraphSizeError):
            cartesian_product(hypercube(11), hypercube(10))

    def test_disconnected_factor_rejected(self):
        split = Graph.from_edges(4, [(0, 1), (2, 3)], require_connected=False)
        with pytest.raises(DisconnectedGraphError):
            cartesian_product(split, named_graph("complete(2)"))


class TestFoldedPower:
    def test_alpha_one_is_identity(self, petersen):
        pg = folded_power(petersen, 1)
        assert pg.graph == petersen
        assert pg.label_of(7) == (7,)

    def test_heawood_squared(self, heawood):
        pg = folded_power(heawood, 2)
        assert (pg.n, is_regular(pg.graph), diameter(pg.graph)) == (196, 6, 6)

    @pytest.mark.parametrize("m", [1, 2, 3, 5])
    def test_hypercube_from_k2(self, m):
        assert folded_power(hypercube(1), m).graph == hypercube(m)

    def test_invalid_alpha(self, petersen):
        with pytest.raises(ValueError):
            folded_power(petersen, 0)

    def test_power_size_guard(self, petersen):
        with pytest.raises(GraphSizeError):
            folded_power(petersen, 7)


class TestScaling:
    def test_petersen_rows(self, petersen):
        df = folded_scaling({"petersen": petersen}, alpha_max=3, verify_limit=100)
        assert list(df["n"]) == [10, 100, 1000]
        assert list(df["diameter"]) == [2, 4, 6]
        assert list(df["degree"]) == [3, 6, 9]
        assert list(df["bfs_verified"]) == [True, True, False]

    def test_several_bases(self, petersen, heawood):
        df = folded_scaling({"petersen": petersen, "heawood": heawood}, alpha_max=2, verify_limit=0)
        assert list(df["topology"]) == ["petersen", "petersen", "heawood", "heawood"]
        assert list(df["n"]) == [10, 100, 14, 196]
        assert not df["bfs_verified"].any()
