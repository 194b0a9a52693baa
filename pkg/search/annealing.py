"""Simulated-annealing search for minimal-MPL regular graphs.

Each restart starts from a random connected regular graph and explores
double edge swaps. The objective is the integer total distance over
unordered pairs (MPL times n(n-1)/2), so comparisons stay exact. Worsening
moves are accepted with probability exp(-delta / T).
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from topology import Graph, mean_path_length
from utils import derive_seed

from .config import SearchConfig
from .moore import moore_mpl_bound
from .moves import SwapState, random_regular

logger = logging.getLogger(__name__)

# consecutive invalid proposals before a restart gives up
MAX_CONSECUTIVE_REJECTS = 10_000


@dataclass(frozen=True)
class SearchResult:
    graph: Graph
    mpl: Fraction
    diameter: int
    evaluations_used: int
    hit_lower_bound: bool
    hit_target: bool
    restart_index: int
    restart_seed: int
    trace: tuple[int, ...]


@dataclass(frozen=True)
class _RestartOutcome:
    index: int
    seed: int
    edges: tuple[tuple[int, int], ...]
    total: int
    diameter: int
    evaluations: int
    trace: tuple[int, ...]


def _run_restart(cfg: SearchConfig, index: int, budget: int, stop_total: Fraction) -> _RestartOutcome:
    seed = derive_seed(cfg.seed, index)
    rng = np.random.default_rng(seed)
    state = SwapState(random_regular(cfg.n, cfg.k, seed))
    current, current_diameter = state.evaluate()
    evaluations = 1
    best, best_diameter, best_edges = current, current_diameter, tuple(state.edges)
    trace = [best]

    schedule = cfg.schedule
    temperature = schedule.initial_temp
    steps = 0
    rejects = 0
    while best > stop_total and evaluations < budget:
        move = state.propose(rng)
        if move is None:
            rejects += 1
            if rejects >= MAX_CONSECUTIVE_REJECTS:
                logger.warning(f"Restart {index}: no valid swap found in {rejects} proposals, stopping")
                break
            continue
        rejects = 0

        old = state.apply(move)
        summary = state.evaluate()
        evaluations += 1
        if summary is None:
            state.revert(move, old)
        else:
            delta = summary[0] - current
            if delta <= 0 or rng.random() < math.exp(-delta / temperature):
                current, current_diameter = summary
                if current < best:
                    best, best_diameter, best_edges = current, current_diameter, tuple(state.edges)
                    trace.append(best)
            else:
                state.revert(move, old)

        steps += 1
        if steps % schedule.steps_per_temp == 0:
            temperature *= schedule.decay
            if temperature < schedule.min_temp:
                temperature = schedule.initial_temp

    logger.info(f"Restart {index} (seed {seed}): best total distance {best} after {evaluations} evaluations")
    return _RestartOutcome(index, seed, best_edges, best, best_diameter, evaluations, tuple(trace))


def search_optimal(cfg: SearchConfig, threads: int = 1) -> SearchResult:
    """Search for an (n,k)-regular graph of minimal MPL.

    The evaluation budget is split evenly over the restarts. A restart stops
    early once it reaches the Moore bound (or `cfg.target_mpl`). Restarts are
    merged by lowest total distance, then lowest restart index, so the result
    is independent of `threads`.
    """
    pairs = cfg.n * (cfg.n - 1) // 2
    bound = moore_mpl_bound(cfg.n, cfg.k)
    stop_mpl = max(bound, cfg.target_mpl) if cfg.target_mpl is not None else bound
    stop_total = stop_mpl * pairs
    per_restart = max(1, cfg.budget // cfg.restarts)

    logger.info(
        f"Searching ({cfg.n},{cfg.k}): {cfg.restarts} restarts x {per_restart} evaluations, Moore bound {bound}"
    )
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        outcomes = list(pool.map(lambda i: _run_restart(cfg, i, per_restart, stop_total), range(cfg.restarts)))

    winner = min(outcomes, key=lambda o: (o.total, o.index))
    graph = Graph.from_edges(cfg.n, winner.edges, name=f"search({cfg.n},{cfg.k})")
    mpl = mean_path_length(graph)
    return SearchResult(
        graph=graph,
        mpl=mpl,
        diameter=winner.diameter,
        evaluations_used=sum(o.evaluations for o in outcomes),
        hit_lower_bound=mpl == bound,
        hit_target=cfg.target_mpl is not None and mpl <= cfg.target_mpl,
        restart_index=winner.index,
        restart_seed=winner.seed,
        trace=winner.trace,
    )
