"""Exact and heuristic solvers for the load-balancing model.

Both work on the integer sum of squared loads, which has the same minimizers
as the variance objective (the total load is fixed by the model).
"""

import logging
import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from enum import StrEnum
from typing import NamedTuple

import numpy as np

from errors import SearchSpaceTooLargeError, UnbalancedRoutingError
from search import AnnealSchedule
from utils import derive_seed

from .model import LoadProfile, RoutingModel, Selection, load_profile, min_sum_squares
from .paths import Path, path_interior

logger = logging.getLogger(__name__)

EXACT_LEAF_LIMIT = 10**7
DEFAULT_LOCAL_RESTARTS = 4
DEFAULT_LOCAL_STEPS = 20_000


class SolverKind(StrEnum):
    AUTO = "auto"
    EXACT = "exact"
    LOCAL = "local"
    FLOYD = "floyd"


class RoutingSolution(NamedTuple):
    selection: Selection
    profile: LoadProfile


def _free_interiors(model: RoutingModel, groups: list[int]) -> list[list[Path]]:
    return [[path_interior(p) for p in model.groups[m].paths] for m in groups]


def _to_selection(model: RoutingModel, groups: list[int], rows: list[int]) -> Selection:
    chosen = [0] * len(model.groups)
    for m, c in zip(groups, rows, strict=True):
        chosen[m] = c
    return Selection(chosen=tuple(chosen))


def solve_exact(model: RoutingModel, max_leaves: int = EXACT_LEAF_LIMIT) -> RoutingSolution:
    """Global optimum by depth-first branch and bound.

    Groups are branched in index order and candidates in index order, so
    leaves are visited in lexicographic order of the selection vector. Only
    strict improvements replace the incumbent, so among optimal selections
    the lexicographically smallest one is returned.
    The search stops as soon as the incumbent reaches the best value any
    integer load vector with the model's total could have.
    """
    space = model.selection_space()
    if space > max_leaves:
        raise SearchSpaceTooLargeError(space, max_leaves)

    order = list(model.free_groups)
    interiors = _free_interiors(model, order)
    h = model.h

    # loads never drop below h, so each group adds at least this much to sum(d^2)
    min_increment = [min(sum(2 * h[v] + 1 for v in cand) for cand in cands) for cands in interiors]
    suffix = [0] * (len(order) + 1)
    for i in range(len(order) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + min_increment[i]
    floor = min_sum_squares(model.total_load, model.graph.n)

    d = list(h)
    choice = [0] * len(order)
    best_sq = math.inf
    best_choice: list[int] = []
    leaves = 0

    def dfs(i: int, sum_sq: int) -> bool:
        nonlocal best_sq, best_choice, leaves
        if sum_sq + suffix[i] >= best_sq:
            return False
        if i == len(order):
            leaves += 1
            best_sq, best_choice = sum_sq, choice.copy()
            return sum_sq == floor
        for c, interior in enumerate(interiors[i]):
            increment = 0
            for v in interior:
                increment += 2 * d[v] + 1
                d[v] += 1
            choice[i] = c
            stop = dfs(i + 1, sum_sq + increment)
            for v in interior:
                d[v] -= 1
            if stop:
                return True
        return False

    dfs(0, sum(x * x for x in h))
    selection = _to_selection(model, order, best_choice)
    profile = load_profile(model, selection)
    logger.info(
        f"Exact solver: space {space}, {leaves} improving leaves, objective {profile.objective}"
    )
    return RoutingSolution(selection, profile)


class _LoadState:
    """Current choice per free group plus the loads it induces, updated incrementally."""

    def __init__(self, h: tuple[int, ...], interiors: list[list[Path]], rows: list[int]):
        self.interiors = interiors
        self.rows = list(rows)
        self.d = list(h)
        for cands, c in zip(interiors, rows, strict=True):
            for v in cands[c]:
                self.d[v] += 1
        self.sum_sq = sum(x * x for x in self.d)

    def copy(self) -> "_LoadState":
        clone = object.__new__(_LoadState)
        clone.interiors = self.interiors
        clone.rows = self.rows.copy()
        clone.d = self.d.copy()
        clone.sum_sq = self.sum_sq
        return clone

    def delta(self, row: int, cand: int) -> int:
        change: dict[int, int] = {}
        for v in self.interiors[row][self.rows[row]]:
            change[v] = change.get(v, 0) - 1
        for v in self.interiors[row][cand]:
            change[v] = change.get(v, 0) + 1
        return sum(2 * self.d[v] * c + c * c for v, c in change.items() if c)

    def move(self, row: int, cand: int, delta: int) -> None:
        for v in self.interiors[row][self.rows[row]]:
            self.d[v] -= 1
        for v in self.interiors[row][cand]:
            self.d[v] += 1
        self.rows[row] = cand
        self.sum_sq += delta


def _greedy_descent(state: _LoadState) -> None:
    """Apply the steepest single-group reselection until none improves."""
    while True:
        best_delta, best_move = 0, None
        for row, cands in enumerate(state.interiors):
            for cand in range(len(cands)):
                if cand == state.rows[row]:
                    continue
                delta = state.delta(row, cand)
                if delta < best_delta:
                    best_delta, best_move = delta, (row, cand)
        if best_move is None:
            return
        state.move(*best_move, best_delta)


def _rows_through(state: _LoadState) -> list[set[int]]:
    through: list[set[int]] = [set() for _ in state.d]
    for row, c in enumerate(state.rows):
        for v in state.interiors[row][c]:
            through[v].add(row)
    return through


def _chain_to(parent: dict[int, tuple[int, int, int] | None], node: int) -> list[tuple[int, int]]:
    steps = []
    while (link := parent[node]) is not None:
        node, row, cand = link
        steps.append((row, cand))
    return steps[::-1]


def _find_transfer_chain(state: _LoadState, through: list[set[int]]) -> list[tuple[int, int]] | None:
    """Breadth-first search for a chain of reselections moving one unit of load.

    An arc u -> x is a reselection whose interior is the current one with u
    replaced by x. Along a chain with distinct rows every inner node keeps
    its load, the first node loses one and the last gains one, so a chain
    from a node to one at least two units lighter lowers sum(d^2). Sources
    are searched one load level at a time, heaviest first.
    """
    d = state.d
    low = min(d)
    for level in sorted({x for x in d if x - low >= 2}, reverse=True):
        parent: dict[int, tuple[int, int, int] | None] = {v: None for v in range(len(d)) if d[v] == level}
        queue = deque(parent)
        while queue:
            u = queue.popleft()
            used = {row for row, _ in _chain_to(parent, u)}
            for row in sorted(through[u] - used):
                current = state.interiors[row][state.rows[row]]
                for cand, interior in enumerate(state.interiors[row]):
                    if cand == state.rows[row] or u in interior:
                        continue
                    added = [v for v in interior if v not in current]
                    if len(added) != 1 or added[0] in parent:
                        continue
                    x = added[0]
                    parent[x] = (u, row, cand)
                    if d[x] <= level - 2:
                        return _chain_to(parent, x)
                    queue.append(x)
    return None


def _transfer_repair(state: _LoadState) -> None:
    """Apply load-transfer chains until no node can pass a unit to a lighter one."""
    through = _rows_through(state)
    while (chain := _find_transfer_chain(state, through)) is not None:
        for row, cand in chain:
            for v in state.interiors[row][state.rows[row]]:
                through[v].discard(row)
            for v in state.interiors[row][cand]:
                through[v].add(row)
            state.move(row, cand, state.delta(row, cand))


def _polish(state: _LoadState) -> None:
    """Alternate steepest descent and transfer chains until neither improves."""
    while True:
        _greedy_descent(state)
        before = state.sum_sq
        _transfer_repair(state)
        if state.sum_sq == before:
            return


def _anneal(start: _LoadState, seed: int, schedule: AnnealSchedule, steps: int, floor: int) -> _LoadState:
    rng = np.random.default_rng(seed)
    state = start.copy()
    best = state.copy()
    temperature = schedule.initial_temp
    for step in range(1, steps + 1):
        if best.sum_sq == floor:
            break
        row = int(rng.integers(len(state.interiors)))
        size = len(state.interiors[row])
        cand = int(rng.integers(size - 1))
        if cand >= state.rows[row]:
            cand += 1
        delta = state.delta(row, cand)
        if delta <= 0 or rng.random() < math.exp(-delta / temperature):
            state.move(row, cand, delta)
            if state.sum_sq < best.sum_sq:
                best = state.copy()
        if step % schedule.steps_per_temp == 0:
            temperature *= schedule.decay
            if temperature < schedule.min_temp:
                temperature = schedule.initial_temp
    _polish(best)
    return best


def solve_local(
    model: RoutingModel,
    seed: int = 1,
    schedule: AnnealSchedule | None = None,
    restarts: int = DEFAULT_LOCAL_RESTARTS,
    steps: int = DEFAULT_LOCAL_STEPS,
    threads: int = 1,
) -> RoutingSolution:
    """Greedy descent from the first-candidate selection, then annealing restarts.

    Every descent is finished with load-transfer chains: sequences of
    reselections that pass one unit of load from a heavy node through nodes
    whose loads stay put to a node at least two units lighter.

    Restart r uses seed derive_seed(seed, r). The greedy result competes with
    the restarts and wins ties, so the answer is never worse than it.
    """
    schedule = schedule or AnnealSchedule()
    groups = list(model.free_groups)
    if not groups:
        selection = Selection.first(model)
        return RoutingSolution(selection, load_profile(model, selection))

    interiors = _free_interiors(model, groups)
    greedy = _LoadState(model.h, interiors, [0] * len(groups))
    _polish(greedy)
    floor = min_sum_squares(model.total_load, model.graph.n)
    logger.info(f"Local solver: greedy descent and transfer chains reached sum(d^2)={greedy.sum_sq} (floor {floor})")

    outcomes = [(greedy.sum_sq, -1, greedy.rows)]
    if greedy.sum_sq > floor and restarts > 0:
        with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
            states = list(
                pool.map(lambda r: _anneal(greedy, derive_seed(seed, r), schedule, steps, floor), range(restarts))
            )
        outcomes.extend((state.sum_sq, r, state.rows) for r, state in enumerate(states))

    sum_sq, index, rows = min(outcomes, key=lambda o: (o[0], o[1]))
    logger.info(f"Local solver: best sum(d^2)={sum_sq} from {'greedy' if index < 0 else f'restart {index}'}")
    selection = _to_selection(model, groups, rows)
    return RoutingSolution(selection, load_profile(model, selection))


def solve(
    model: RoutingModel,
    seed: int = 1,
    schedule: AnnealSchedule | None = None,
    restarts: int = DEFAULT_LOCAL_RESTARTS,
    steps: int = DEFAULT_LOCAL_STEPS,
    threads: int = 1,
    max_leaves: int = EXACT_LEAF_LIMIT,
) -> tuple[RoutingSolution, SolverKind]:
    """Exact when the selection space fits under `max_leaves`, local search otherwise."""
    space = model.selection_space()
    if space <= max_leaves:
        return solve_exact(model, max_leaves), SolverKind.EXACT
    logger.info(f"Selection space {space} exceeds {max_leaves}, falling back to local search")
    return solve_local(model, seed, schedule, restarts, steps, threads), SolverKind.LOCAL


def require_balanced(profile: LoadProfile, instance: str, max_band: int = 0) -> None:
    """Raise UnbalancedRoutingError naming `instance` when the load band exceeds `max_band`."""
    if profile.band > max_band:
        raise UnbalancedRoutingError(instance, profile.objective, profile.band, max_band)
