"""Flow-level traffic evaluation of routing tables."""

from .report import COMPARED_METRICS, Comparison, SimReport, compare_report, link_load_frame, node_load_frame, simulate
from .throughput import Throughput, alltoall_curve, alltoall_estimate, saturation_throughput
from .traffic import (
    TrafficPattern,
    TrafficSpec,
    directed_links,
    link_load_counts,
    link_loads,
    node_load_counts,
    node_loads,
)

__all__ = [
    "COMPARED_METRICS",
    "Comparison",
    "SimReport",
    "Throughput",
    "TrafficPattern",
    "TrafficSpec",
    "alltoall_curve",
    "alltoall_estimate",
    "compare_report",
    "directed_links",
    "link_load_counts",
    "link_load_frame",
    "link_loads",
    "node_load_counts",
    "node_load_frame",
    "node_loads",
    "saturation_throughput",
    "simulate",
]
