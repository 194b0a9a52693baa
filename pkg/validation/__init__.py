"""Validation package for report tables."""

from .schemas import (
    AlltoallCurveSchema,
    GraphMetricsSchema,
    LinkLoadSchema,
    NodeLoadSchema,
    ScalingSchema,
)
from .validators import validate_dataframe

__all__ = [
    "AlltoallCurveSchema",
    "GraphMetricsSchema",
    "LinkLoadSchema",
    "NodeLoadSchema",
    "ScalingSchema",
    "validate_dataframe",
]
