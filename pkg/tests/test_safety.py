"""Tests for artifact writing, integrity checks and small utilities."""

from fractions import Fraction

import pytest

from safety import ArtifactWriter, artifacts_identical, file_sha256, strip_header, text_sha256
from utils import derive_seed, format_decimal, format_metadata, format_rational, get_default_threads


class TestArtifactWriter:
    def test_header_with_timestamp(self):
        header = ArtifactWriter("nestnet gen --name petersen", seed=7).header().splitlines()
        assert header[0].startswith("# created: ")
        assert header[1:] == ["# command: nestnet gen --name petersen", "# seed: 7"]

    def test_header_without_timestamp_or_seed(self):
        assert ArtifactWriter("nestnet product", timestamp=False).header() == "# command: nestnet product\n"

    def test_write_records_digest(self, tmp_path):
        writer = ArtifactWriter("nestnet route", seed=1, timestamp=False)
        target = tmp_path / "nested" / "p.rt"
        artifact = writer.write(target, "ROUTES unordered 2 1\n0 1 1 0 1\n")
        assert target.read_text().startswith("# command: nestnet route\n# seed: 1\nROUTES")
        assert artifact.sha256 == file_sha256(target)
        assert writer.written == [artifact]
        assert [p.name for p in (tmp_path / "nested").iterdir()] == ["p.rt"]

    def test_overwrite_is_complete(self, tmp_path):
        writer = ArtifactWriter("cmd", timestamp=False)
        target = tmp_path / "a.txt"
        writer.write(target, "first version, somewhat longer\n")
        writer.write(target, "second\n")
        assert target.read_text() == "# command: cmd\nsecond\n"


class TestIntegrity:
    def test_text_digest(self):
        assert text_sha256("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"

    def test_strip_header(self):
        assert strip_header("# created: x\n# command: y\nbody\n# not header\n") == "body\n# not header\n"

    def test_timestamp_ignored(self, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        a.write_text("# created: 2026-01-01T00:00:00Z\n# command: c\nbody\n")
        b.write_text("# created: 2026-02-02T00:00:00Z\n# command: c\nbody\n")
        assert artifacts_identical(a, b)
        assert not artifacts_identical(a, b, ignore_timestamp=False)

    def test_body_difference_detected(self, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        a.write_text("# command: c\nbody\n")
        b.write_text("# command: c\nbody2\n")
        assert not artifacts_identical(a, b)


class TestUtils:
    @pytest.mark.parametrize(
        ("value", "expected"),
        [(Fraction(5, 3), "1.67"), (Fraction(11, 5), "2.2"), (Fraction(2), "2"), (1.5, "1.5")],
    )
    def test_format_decimal(self, value, expected):
        assert format_decimal(value) == expected

    def test_format_rational(self):
        assert format_rational(Fraction(83, 29)) == "83/29"
        assert format_rational(Fraction(0)) == "0/1"

    def test_format_metadata(self):
        assert format_metadata({"D": 2, "hit_lower_bound": True}) == "D=2\nhit_lower_bound=true"

    def test_derive_seed(self):
        assert derive_seed(1, 0) == 1
        assert derive_seed(1, 1) == 0
        assert derive_seed(2**64 - 1, 3) == 2**64 - 4

    def test_default_threads(self, monkeypatch):
        monkeypatch.delenv("NESTNET_THREADS", raising=False)
        assert get_default_threads() == 1
        monkeypatch.setenv("NESTNET_THREADS", "6")
        assert get_default_threads() == 6
        monkeypatch.setenv("NESTNET_THREADS", "zero")
        assert get_default_threads() == 1
        monkeypatch.setenv("NESTNET_THREADS", "-2")
        assert get_default_threads() == 1
