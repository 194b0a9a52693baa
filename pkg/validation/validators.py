"""Schema validation for the tables the workbench writes."""

import logging

import pandas as pd
import pandera.pandas as pa

logger = logging.getLogger(__name__)

# failure cases listed per (column, check) before the rest is summarized
MAX_LISTED_CASES = 5


def validate_dataframe(df: pd.DataFrame, schema: type[pa.DataFrameModel], name: str) -> pd.DataFrame:
    """Validate `df` lazily, log failures grouped by column and check, then re-raise."""
    try:
        return schema.validate(df, lazy=True)
    except pa.errors.SchemaErrors as e:
        cases = e.failure_cases
        logger.error(f"Validation failed for {name} ({len(df)} rows, {len(cases)} failure cases)")
        for (column, check), group in cases.groupby(["column", "check"], dropna=False, sort=False):
            listed = ", ".join(str(v) for v in group["failure_case"].head(MAX_LISTED_CASES))
            more = f" (+{len(group) - MAX_LISTED_CASES} more)" if len(group) > MAX_LISTED_CASES else ""
            logger.error(f"  - {column}: {check} failed for {listed}{more}")
        raise
    except pa.errors.SchemaError as e:
        logger.error(f"Validation error for {name}: {e}")
        raise
