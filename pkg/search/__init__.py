"""Topology search: minimal-MPL regular graphs by degree-preserving annealing."""

from .annealing import SearchResult, search_optimal
from .config import AnnealSchedule, SearchConfig
from .moore import moore_diameter_bound, moore_distance_distribution, moore_mpl_bound
from .moves import SwapState, double_edge_swap, random_regular, swap_edges

__all__ = [
    "AnnealSchedule",
    "SearchConfig",
    "SearchResult",
    "SwapState",
    "double_edge_swap",
    "moore_diameter_bound",
    "moore_distance_distribution",
    "moore_mpl_bound",
    "random_regular",
    "search_optimal",
    "swap_edges",
]
