"""Simulation reports and balanced-vs-baseline comparisons."""

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import pandas as pd

from errors import TableMismatchError
from routing import RoutingTable, table_load_profile
from topology import Graph
from utils import format_rational
from validation import LinkLoadSchema, NodeLoadSchema, validate_dataframe

from .throughput import alltoall_estimate, saturation_throughput
from .traffic import TrafficSpec, directed_links, link_loads, node_loads

logger = logging.getLogger(__name__)

DEFAULT_MESSAGE_SIZE = 1.0

# metric name -> True when larger is better
COMPARED_METRICS: dict[str, bool] = {
    "max_node_load": False,
    "mean_node_load": False,
    "std_node_load": False,
    "max_link_load": False,
    "mean_link_load": False,
    "objective": False,
    "load_band": False,
    "saturation_throughput": True,
    "alltoall_estimate": False,
}


@dataclass(frozen=True)
class SimReport:
    node_load: tuple[float, ...]
    links: tuple[tuple[int, int], ...]
    link_load: tuple[float, ...]
    objective: Fraction
    load_band: int
    saturation_throughput: float
    capacity_bound: bool
    alltoall_estimate: float
    message_size: float

    @property
    def max_node_load(self) -> float:
        return max(self.node_load, default=0.0)

    @property
    def mean_node_load(self) -> float:
        return float(np.mean(self.node_load)) if self.node_load else 0.0

    @property
    def std_node_load(self) -> float:
        return float(np.std(self.node_load)) if self.node_load else 0.0

    @property
    def max_link_load(self) -> float:
        return max(self.link_load, default=0.0)

    @property
    def mean_link_load(self) -> float:
        return float(np.mean(self.link_load)) if self.link_load else 0.0

    @property
    def std_link_load(self) -> float:
        return float(np.std(self.link_load)) if self.link_load else 0.0

    def metric(self, name: str) -> float:
        return float(getattr(self, name))

    def metadata(self) -> dict[str, object]:
        return {
            "max_node_load": self.max_node_load,
            "mean_node_load": round(self.mean_node_load, 6),
            "max_link_load": self.max_link_load,
            "mean_link_load": round(self.mean_link_load, 6),
            "std_link_load": round(self.std_link_load, 6),
            "objective": format_rational(self.objective),
            "load_band": self.load_band,
            "saturation_throughput": round(self.saturation_throughput, 6),
            "capacity_bound": self.capacity_bound,
            "alltoall_estimate": round(self.alltoall_estimate, 9),
        }


def simulate(
    table: RoutingTable,
    graph: Graph,
    spec: TrafficSpec | None = None,
    message_size: float = DEFAULT_MESSAGE_SIZE,
    threads: int = 1,
) -> SimReport:
    spec = spec or TrafficSpec()
    profile = table_load_profile(table)
    nodes = node_loads(table, spec, graph, threads)
    links = link_loads(table, graph, spec, threads)
    throughput = saturation_throughput(table, graph, spec, threads)
    report = SimReport(
        node_load=tuple(float(x) for x in nodes),
        links=tuple(directed_links(graph)),
        link_load=tuple(float(x) for x in links),
        objective=profile.objective,
        load_band=profile.band,
        saturation_throughput=throughput.per_node,
        capacity_bound=throughput.capacity_bound,
        alltoall_estimate=alltoall_estimate(table, graph, message_size, spec, threads),
        message_size=message_size,
    )
    logger.info(
        f"Simulated {len(table)} demands: max node load {report.max_node_load}, "
        f"max link load {report.max_link_load}"
    )
    return report


def node_load_frame(report: SimReport) -> pd.DataFrame:
    df = pd.DataFrame({"id": range(len(report.node_load)), "load": report.node_load})
    return validate_dataframe(df.astype({"id": "int64", "load": "float64"}), NodeLoadSchema, "node loads")


def link_load_frame(report: SimReport) -> pd.DataFrame:
    df = pd.DataFrame(
        {
            "id": range(len(report.links)),
            "src": [u for u, _ in report.links],
            "dst": [v for _, v in report.links],
            "load": report.link_load,
        }
    )
    df = df.astype({"id": "int64", "src": "int64", "dst": "int64", "load": "float64"})
    return validate_dataframe(df, LinkLoadSchema, "link loads")


@dataclass(frozen=True)
class Comparison:
    labels: tuple[str, str]
    first: SimReport
    second: SimReport

    def delta(self, metric: str) -> float:
        """second - first."""
        return self.second.metric(metric) - self.first.metric(metric)

    def winner(self, metric: str) -> str:
        a, b = self.first.metric(metric), self.second.metric(metric)
        if np.isclose(a, b, rtol=1e-12, atol=1e-12):
            return "tie"
        first_wins = a > b if COMPARED_METRICS[metric] else a < b
        return self.labels[0] if first_wins else self.labels[1]

    def frame(self) -> pd.DataFrame:
        rows = [
            {
                "metric": metric,
                self.labels[0]: self.first.metric(metric),
                self.labels[1]: self.second.metric(metric),
                "delta": self.delta(metric),
                "winner": self.winner(metric),
            }
            for metric in COMPARED_METRICS
        ]
        return pd.DataFrame(rows)

    def render(self) -> str:
        """Aligned plain-text comparison table."""
        return self.frame().to_string(index=False, float_format=lambda x: f"{x:.6g}")

    def metadata(self) -> dict[str, object]:
        values: dict[str, object] = {}
        for metric in COMPARED_METRICS:
            values[f"delta_{metric}"] = round(self.delta(metric), 9)
            values[f"winner_{metric}"] = self.winner(metric)
        return values


def compare_report(
    table_a: RoutingTable,
    table_b: RoutingTable,
    graph: Graph,
    spec: TrafficSpec | None = None,
    labels: tuple[str, str] = ("a", "b"),
    message_size: float = DEFAULT_MESSAGE_SIZE,
    threads: int = 1,
) -> Comparison:
    """Run both tables on the same graph and traffic and line their metrics up."""
    if table_a.n != table_b.n:
        raise TableMismatchError(f"tables cover {table_a.n} and {table_b.n} vertices")
    if labels[0] == labels[1]:
        raise ValueError(f"comparison labels must differ, got {labels}")
    spec = spec or TrafficSpec()
    return Comparison(
        labels=labels,
        first=simulate(table_a, graph, spec, message_size, threads),
        second=simulate(table_b, graph, spec, message_size, threads),
    )
