"""Artifact safety: atomic provenance-stamped writes and integrity checks."""

from .artifacts import ArtifactWriter, WrittenArtifact
from .integrity import artifacts_identical, file_sha256, strip_header, text_sha256

__all__ = [
    "ArtifactWriter",
    "WrittenArtifact",
    "artifacts_identical",
    "file_sha256",
    "strip_header",
    "text_sha256",
]
