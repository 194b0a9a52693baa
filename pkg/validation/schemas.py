"""Validation schemas for report tables and CSV dumps.

Every frame the workbench writes (metrics tables, load dumps, scaling and
all-to-all sweeps) is checked against one of these models before it leaves
the process.
"""

import pandera.pandas as pa
from pandera.typing import Series


class GraphMetricsSchema(pa.DataFrameModel):
    """Diameter, mean path length and bisection width, one row per graph."""

    graph: Series[str] = pa.Field(str_length={"min_value": 1})
    n: Series[int] = pa.Field(ge=1)
    k: Series[int] = pa.Field(ge=-1)  # -1 when irregular
    diameter: Series[int] = pa.Field(ge=0)
    mpl: Series[float] = pa.Field(ge=0.0)
    bisection_width: Series[int] = pa.Field(ge=0)
    bisection_exact: Series[bool]


class NodeLoadSchema(pa.DataFrameModel):
    """Per-node forwarded flow."""

    id: Series[int] = pa.Field(unique=True, ge=0)
    load: Series[float] = pa.Field(ge=0.0)


class LinkLoadSchema(pa.DataFrameModel):
    """Per-directed-edge flow; ids follow the sorted (src, dst) order."""

    id: Series[int] = pa.Field(unique=True, ge=0)
    src: Series[int] = pa.Field(ge=0)
    dst: Series[int] = pa.Field(ge=0)
    load: Series[float] = pa.Field(ge=0.0)

    @pa.dataframe_check
    def no_self_links(cls, df):
        return df["src"] != df["dst"]


class ScalingSchema(pa.DataFrameModel):
    """Folded-network sizes and diameters (N, D, k per fold count)."""

    topology: Series[str] = pa.Field(str_length={"min_value": 1})
    alpha: Series[int] = pa.Field(ge=1)
    n: Series[int] = pa.Field(ge=1)
    diameter: Series[int] = pa.Field(ge=0)
    degree: Series[int] = pa.Field(ge=-1)
    bfs_verified: Series[bool]


class AlltoallCurveSchema(pa.DataFrameModel):
    """All-to-all time estimate as a function of message size."""

    message_size: Series[float] = pa.Field(ge=0.0)
    estimate: Series[float] = pa.Field(ge=0.0)
