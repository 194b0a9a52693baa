"""Pytest configuration and shared fixtures for the nested network workbench tests."""

import pytest

from product import cartesian_product
from routing import DemandMode, build_model, solve_exact
from search import SearchConfig, search_optimal
from topology import Graph, named_graph


def pytest_addoption(parser):
    """Add custom command line options for tests."""
    parser.addoption(
        "--run-slow",
        action="store_true",
        default=False,
        help="Run slow reproduction tests (full topology searches, large products)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="slow; enable with --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def petersen() -> Graph:
    return named_graph("petersen")


@pytest.fixture(scope="session")
def heawood() -> Graph:
    return named_graph("heawood")


@pytest.fixture(scope="session")
def levi() -> Graph:
    return named_graph("levi")


@pytest.fixture(scope="session")
def c4() -> Graph:
    return named_graph("cycle(4)")


@pytest.fixture(scope="session")
def c5() -> Graph:
    return named_graph("cycle(5)")


@pytest.fixture(scope="session")
def k3() -> Graph:
    return named_graph("complete(3)")


@pytest.fixture(scope="session")
def k4() -> Graph:
    return named_graph("complete(4)")


@pytest.fixture(scope="session")
def cube() -> Graph:
    return named_graph("hypercube(3)")


@pytest.fixture(scope="session")
def petersen_squared(petersen):
    return cartesian_product(petersen, petersen)


@pytest.fixture(scope="session")
def c4_ordered_solution(c4):
    model = build_model(c4, DemandMode.ORDERED)
    return model, solve_exact(model)


def _searched(n: int, k: int, target_mpl: str | None = None) -> Graph:
    cfg = SearchConfig(n=n, k=k, seed=1, target_mpl=target_mpl)
    return search_optimal(cfg, threads=8).graph


# Searched instances run a full annealing search; only slow tests request them.
@pytest.fixture(scope="session")
def searched_16_3() -> Graph:
    return _searched(16, 3)


@pytest.fixture(scope="session")
def searched_16_4() -> Graph:
    return _searched(16, 4, target_mpl="7/4")


@pytest.fixture(scope="session")
def searched_32_3() -> Graph:
    return _searched(32, 3)


@pytest.fixture(scope="session")
def searched_32_4() -> Graph:
    return _searched(32, 4)
