"""Atomic artifact writes with provenance headers."""

import logging
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

from utils import ensure_parent_dir, now_utc

from .integrity import text_sha256

logger = logging.getLogger(__name__)

CREATED_PREFIX = "# created: "


@dataclass(frozen=True)
class WrittenArtifact:
    path: Path
    sha256: str


class ArtifactWriter:
    """Writes text artifacts prefixed with '# command:' / '# seed:' comment lines.

    The '# created:' timestamp line is the only part that varies between
    identical runs and is left out when `timestamp` is False.
    """

    def __init__(self, command: str, seed: int | None = None, timestamp: bool = True):
        self.command = command
        self.seed = seed
        self.timestamp = timestamp
        self.written: list[WrittenArtifact] = []

    def header(self) -> str:
        lines = []
        if self.timestamp:
            lines.append(f"{CREATED_PREFIX}{now_utc().strftime('%Y-%m-%dT%H:%M:%SZ')}")
        lines.append(f"# command: {self.command}")
        if self.seed is not None:
            lines.append(f"# seed: {self.seed}")
        return "\n".join(lines) + "\n"

    def write(self, path: Path, body: str) -> WrittenArtifact:
        path = Path(path)
        content = self.header() + body
        ensure_parent_dir(path)
        fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
                f.write(content)
            os.replace(tmp_name, path)
        except OSError as e:
            Path(tmp_name).unlink(missing_ok=True)
            raise RuntimeError(f"Failed to write artifact {path}: {e}") from e
        artifact = WrittenArtifact(path=path, sha256=text_sha256(content))
        self.written.append(artifact)
        logger.info(f"Wrote {path} (sha256 {artifact.sha256[:12]})")
        return artifact
