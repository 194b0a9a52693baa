"""Artifact digests and reproducibility comparisons."""

import hashlib
import logging
from pathlib import Path

logger = logging.getLogger(__name__)

CHUNK_SIZE = 65536


def text_sha256(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def file_sha256(path: Path) -> str:
    """SHA-256 of a file's bytes."""
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(CHUNK_SIZE), b""):
            digest.update(chunk)
    return digest.hexdigest()


def strip_header(text: str, prefix: str = "#") -> str:
    """Drop the leading comment lines of an artifact."""
    lines = text.splitlines(keepends=True)
    start = 0
    while start < len(lines) and lines[start].startswith(prefix):
        start += 1
    return "".join(lines[start:])


def artifacts_identical(first: Path, second: Path, ignore_timestamp: bool = True) -> bool:
    """Byte-level equality, optionally ignoring '# created:' lines."""
    a, b = Path(first).read_bytes(), Path(second).read_bytes()
    if ignore_timestamp:
        a, b = _drop_created(a), _drop_created(b)
    identical = a == b
    if not identical:
        logger.warning(f"Artifacts differ: {first} vs {second}")
    return identical


def _drop_created(data: bytes) -> bytes:
    return b"".join(line for line in data.splitlines(keepends=True) if not line.startswith(b"# created: "))
