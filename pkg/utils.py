"""Utility functions for the nested network workbench."""

import logging
import os
from datetime import UTC, datetime
from fractions import Fraction
from pathlib import Path

logger = logging.getLogger(__name__)

SEED_MASK = (1 << 64) - 1


def now_utc() -> datetime:
    """Current UTC datetime."""
    return datetime.now(UTC)


def ensure_parent_dir(path: Path) -> None:
    """Create the parent directory of an artifact path if it doesn't exist."""
    path.parent.mkdir(parents=True, exist_ok=True)


def get_default_threads() -> int:
    """Get NESTNET_THREADS from the environment or return the default (1)."""
    threads = os.getenv("NESTNET_THREADS")
    if threads:
        try:
            value = int(threads)
        except ValueError:
            logger.warning(f"NESTNET_THREADS '{threads}' is not a valid integer, using 1")
            return 1
        if value >= 1:
            return value
        logger.warning(f"NESTNET_THREADS '{threads}' must be positive, using 1")
    return 1


def derive_seed(seed: int, index: int) -> int:
    """Per-restart seed: seed XOR restart index, kept in 64 bits."""
    return (seed ^ index) & SEED_MASK


def format_rational(value: Fraction) -> str:
    """Render a rational as 'p/q' (denominator always written)."""
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Fraction | float, places: int = 2) -> str:
    """Short decimal form used in metadata blocks: 5/3 -> '1.67', 11/5 -> '2.2'."""
    text = f"{float(value):.{places}f}"
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def format_metadata(values: dict[str, object]) -> str:
    """Render a key=value metadata block, one pair per line."""
    lines = []
    for key, value in values.items():
        if isinstance(value, bool):
            value = "true" if value else "false"
        lines.append(f"{key}={value}")
    return "\n".join(lines)
