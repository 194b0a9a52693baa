"""The load-balancing model: demands, candidate paths, fixed loads and objective.

Every demand (vertex pair) forms one group holding all of its shortest
paths. Groups with a single candidate are folded into the fixed per-node load
`h`; the remaining "free" groups are the decision variables. A selection picks
one candidate per group, and the per-node forwarding load is

    d_n = h_n + (number of selected free-group paths with n strictly interior)

The objective is the sum of squared deviations from the mean load. All
candidates of a group have the same length, so the total load is fixed and
minimizing the objective is the same as minimizing sum(d_n^2).
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from functools import cached_property

import numpy as np

from topology import Graph

from .paths import DEFAULT_PATH_CAP, Path, all_shortest_paths, path_interior

logger = logging.getLogger(__name__)


class DemandMode(StrEnum):
    UNORDERED = "unordered"
    ORDERED = "ordered"


@dataclass(frozen=True, order=True)
class Demand:
    src: int
    dst: int

    def __post_init__(self):
        if self.src == self.dst:
            raise ValueError(f"demand endpoints must differ, got {self.src}")


@dataclass(frozen=True)
class DemandGroup:
    demand: Demand
    paths: tuple[Path, ...]

    @property
    def is_free(self) -> bool:
        return len(self.paths) > 1


def demands_for(n: int, mode: DemandMode) -> list[Demand]:
    """All demands of a mode, sorted by (src, dst)."""
    if mode == DemandMode.UNORDERED:
        return [Demand(s, t) for s in range(n) for t in range(s + 1, n)]
    return [Demand(s, t) for s in range(n) for t in range(n) if s != t]


@dataclass(frozen=True)
class Selection:
    """Chosen candidate index for every group (always 0 for singleton groups)."""

    chosen: tuple[int, ...]

    @classmethod
    def first(cls, model: RoutingModel) -> Selection:
        return cls(chosen=(0,) * len(model.groups))


@dataclass(frozen=True)
class LoadProfile:
    d: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.d)

    @property
    def sum_squares(self) -> int:
        return sum(x * x for x in self.d)

    @property
    def objective(self) -> Fraction:
        """Sum of squared deviations from the mean load, exactly."""
        if not self.d:
            return Fraction(0)
        return self.sum_squares - Fraction(self.total * self.total, len(self.d))

    @property
    def max_load(self) -> int:
        return max(self.d, default=0)

    @property
    def min_load(self) -> int:
        return min(self.d, default=0)

    @property
    def band(self) -> int:
        return self.max_load - self.min_load


def min_sum_squares(total: int, n: int) -> int:
    """Smallest sum(d^2) over n non-negative integers summing to `total`."""
    q, r = divmod(total, n)
    return (n - r) * q * q + r * (q + 1) * (q + 1)


@dataclass(frozen=True)
class RoutingModel:
    graph: Graph
    demand_mode: DemandMode
    groups: tuple[DemandGroup, ...]
    h: tuple[int, ...]

    @cached_property
    def free_groups(self) -> tuple[int, ...]:
        """Indices of the groups with more than one candidate."""
        return tuple(m for m, group in enumerate(self.groups) if group.is_free)

    @cached_property
    def paths(self) -> tuple[Path, ...]:
        """Global candidate list (free groups only, in group order); column j of P and omega."""
        return tuple(p for m in self.free_groups for p in self.groups[m].paths)

    @cached_property
    def path_group(self) -> tuple[int, ...]:
        """Row of omega owning each column."""
        return tuple(row for row, m in enumerate(self.free_groups) for _ in self.groups[m].paths)

    @cached_property
    def incidence(self) -> np.ndarray:
        """P: P[n, j] = 1 iff vertex n is strictly interior to candidate j."""
        matrix = np.zeros((self.graph.n, len(self.paths)), dtype=np.int8)
        for j, path in enumerate(self.paths):
            matrix[list(path_interior(path)), j] = 1
        matrix.setflags(write=False)
        return matrix

    @cached_property
    def omega(self) -> np.ndarray:
        """Group matrix over free groups: omega[m, j] = 1 iff candidate j serves free group m."""
        matrix = np.zeros((len(self.free_groups), len(self.paths)), dtype=np.int8)
        matrix[list(self.path_group), list(range(len(self.paths)))] = 1
        matrix.setflags(write=False)
        return matrix

    @property
    def total_load(self) -> int:
        """Selection-independent sum of all node loads."""
        fixed = sum(self.h)
        return fixed + sum(len(self.groups[m].paths[0]) - 2 for m in self.free_groups)

    def selection_space(self) -> int:
        space = 1
        for m in self.free_groups:
            space *= len(self.groups[m].paths)
        return space

    def check_selection(self, selection: Selection) -> None:
        if len(selection.chosen) != len(self.groups):
            raise ValueError(f"selection covers {len(selection.chosen)} groups, model has {len(self.groups)}")
        for m, (index, group) in enumerate(zip(selection.chosen, self.groups, strict=True)):
            if not 0 <= index < len(group.paths):
                raise ValueError(f"group {m} has {len(group.paths)} candidates, selection picks {index}")

    def selected_paths(self, selection: Selection) -> list[Path]:
        self.check_selection(selection)
        return [group.paths[index] for group, index in zip(self.groups, selection.chosen, strict=True)]


def _source_groups(graph: Graph, src: int, mode: DemandMode, cap: int) -> list[DemandGroup]:
    targets = range(src + 1, graph.n) if mode == DemandMode.UNORDERED else (t for t in range(graph.n) if t != src)
    return [DemandGroup(Demand(src, t), tuple(all_shortest_paths(graph, src, t, cap))) for t in targets]


def build_model(
    graph: Graph,
    demand_mode: DemandMode = DemandMode.UNORDERED,
    cap: int = DEFAULT_PATH_CAP,
    threads: int = 1,
) -> RoutingModel:
    """Enumerate every demand's shortest paths and fold singleton groups into h."""
    demand_mode = DemandMode(demand_mode)
    graph.require_connected()
    graph.distance_matrix()  # populate the cache before worker threads read it

    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        per_source = list(pool.map(lambda s: _source_groups(graph, s, demand_mode, cap), range(graph.n)))
    groups = tuple(group for chunk in per_source for group in chunk)

    h = [0] * graph.n
    for group in groups:
        if not group.is_free:
            for v in path_interior(group.paths[0]):
                h[v] += 1

    model = RoutingModel(graph=graph, demand_mode=demand_mode, groups=groups, h=tuple(h))
    logger.info(
        f"Routing model for {graph.name or graph.n}: {len(groups)} groups, "
        f"{len(model.free_groups)} free, {len(model.paths)} candidate paths"
    )
    return model


def load_profile(model: RoutingModel, selection: Selection) -> LoadProfile:
    """d = h + P s, recomputed from scratch."""
    model.check_selection(selection)
    d = list(model.h)
    for m in model.free_groups:
        for v in path_interior(model.groups[m].paths[selection.chosen[m]]):
            d[v] += 1
    return LoadProfile(d=tuple(d))


def objective(model: RoutingModel, selection: Selection) -> Fraction:
    return load_profile(model, selection).objective


def loads_from_paths(n: int, paths: Sequence[Path]) -> LoadProfile:
    """Interior-count load profile of an arbitrary path collection."""
    d = [0] * n
    for path in paths:
        for v in path_interior(path):
            d[v] += 1
    return LoadProfile(d=tuple(d))
