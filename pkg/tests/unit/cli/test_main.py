"""Tests for the command-line entry point."""

import json
from pathlib import Path

import pytest

from kfib_pillai import EventCollector, EventHook, RunConfig, run_command
from kfib_pillai._cli import CACHE_HEADER, ResultWriter, build_container, execute


def _json_rows(text: str) -> list[dict[str, object]]:
    return [json.loads(line) for line in text.splitlines() if line.strip()]


class TestFib:
    """Test the fib command."""

    def test_prints_value(self, capsys: pytest.CaptureFixture[str]) -> None:
        """The bare value goes to stdout."""
        assert run_command(["fib", "--k", "4", "--n", "13"]) == 0
        assert capsys.readouterr().out.strip() == "1490"

    def test_writes_row(self, tmp_path: Path) -> None:
        """With --out the value is written as a row."""
        out = tmp_path / "fib.jsonl"
        assert run_command(["fib", "--k", "2", "--n", "10", "--out", str(out)]) == 0
        assert _json_rows(out.read_text()) == [{"k": 2, "n": 10, "value": "55"}]


class TestCommands:
    """Test the row-producing commands."""

    def test_root(self, capsys: pytest.CaptureFixture[str]) -> None:
        """root reports alpha, f_k and tau."""
        assert run_command(["root", "--k", "4", "--bits", "64"]) == 0
        (row,) = _json_rows(capsys.readouterr().out)
        assert row["precision_bits"] == 64
        assert str(row["alpha"]).startswith("1.92756197")
        assert str(row["f_k"]).startswith("0.56634288")
        assert str(row["tau"]).startswith("0.94677724")

    def test_families(self, capsys: pytest.CaptureFixture[str]) -> None:
        """families lists the k = 5 instance of (iv)."""
        assert run_command(["families", "--k", "5", "--n-max", "13"]) == 0
        rows = _json_rows(capsys.readouterr().out)
        assert {"c": "-255", "family": "iv"}.items() <= next(
            row for row in rows if row["c"] == "-255"
        ).items()
        assert all(row["verified"] for row in rows)

    def test_families_statement_forms(self, capsys: pytest.CaptureFixture[str]) -> None:
        """The failing printed form is flagged without changing the exit code."""
        argv = ["families", "--k", "4", "--n-max", "10", "--include-statement-forms"]
        assert run_command(argv) == 0
        rows = _json_rows(capsys.readouterr().out)
        flagged = [row for row in rows if row["form"] == "statement"]
        assert flagged
        assert not any(row["verified"] for row in flagged)

    def test_search_csv(self, tmp_path: Path) -> None:
        """A hashed search writes the record columns."""
        out = tmp_path / "search.csv"
        box = ["--k-min", "4", "--k-max", "4", "--n-max", "10", "--mode", "hash"]
        argv = ["search", *box, "--format", "csv", "--out", str(out)]
        assert run_command(argv) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "k,c,n,m,n1,m1,family"
        values = [int(line.split(",")[1]) for line in lines[1:]]
        assert sorted(value for value in values if value) == [-8, -3, -1, 7, 13]

    def test_bounds(self, capsys: pytest.CaptureFixture[str]) -> None:
        """bounds adds both cutoffs to the bound report."""
        assert run_command(["bounds", "--k", "4"]) == 0
        (row,) = _json_rows(capsys.readouterr().out)
        assert row["k"] == 4
        assert row["cutoff_k"] == 789
        assert row["hypothesis_cutoff_k"] == 794
        assert row["cutoff_satisfied"] is True

    def test_report(self, capsys: pytest.CaptureFixture[str]) -> None:
        """A clean report exits 0."""
        assert run_command(["report", "--k-min", "4", "--k-max", "5", "--n-max", "14"]) == 0
        rows = _json_rows(capsys.readouterr().out)
        assert [row["k"] for row in rows] == [4, 5]
        assert all(row["discrepancies"] == 0 for row in rows)


class TestExitCodes:
    """Test the mapping of failures to exit codes."""

    @pytest.mark.parametrize(
        "argv",
        [
            ["fib", "--k", "4"],
            ["plot"],
            ["families", "--k", "3", "--n-max", "10"],
            ["search", "--mode", "fast"],
            ["reduce", "--case", "gamma", "--k", "4", "--resume"],
        ],
    )
    def test_usage(self, argv: list[str], capsys: pytest.CaptureFixture[str]) -> None:
        """Bad flags exit 2 with a message on stderr."""
        assert run_command(argv) == 2
        assert capsys.readouterr().err

    def test_help(self) -> None:
        """--help is not an error."""
        assert run_command(["--help"]) == 0

    def test_cache_dir_is_a_file(self, tmp_path: Path) -> None:
        """A cache directory that is a file is a configuration error."""
        blocker = tmp_path / "not-a-dir"
        blocker.write_text("x")
        assert run_command(["root", "--k", "4", "--cache-dir", str(blocker)]) == 2

    def test_corrupt_cache(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """A corrupt cache fails the command."""
        (tmp_path / "kfib.cache").write_text("garbage\n")
        assert run_command(["root", "--k", "4", "--cache-dir", str(tmp_path)]) == 3
        assert "Unsupported cache version" in capsys.readouterr().err

    def test_failure_announced(self, tmp_path: Path, event_collector: EventCollector) -> None:
        """A failed command emits ERROR_OCCURRED with the error type."""
        event_collector.subscribe(EventHook.ERROR_OCCURRED)
        (tmp_path / "kfib.cache").write_text("garbage\n")
        assert run_command(["root", "--k", "4", "--cache-dir", str(tmp_path)]) == 3
        event_collector.assert_event_count(1)
        event_collector.assert_has_event(command="root", error="CacheError")

    def test_usage_error_not_announced(self, event_collector: EventCollector) -> None:
        """Usage errors do not emit ERROR_OCCURRED."""
        event_collector.subscribe(EventHook.ERROR_OCCURRED)
        assert run_command(["fib", "--k", "4"]) == 2
        event_collector.assert_event_count(0)


class TestCache:
    """Test cache persistence through the CLI."""

    def test_root_cached(self, tmp_path: Path) -> None:
        """A computed root is saved to the cache directory."""
        assert run_command(["root", "--k", "6", "--bits", "96", "--cache-dir", str(tmp_path)]) == 0
        lines = (tmp_path / "kfib.cache").read_text().splitlines()
        assert lines[0] == CACHE_HEADER
        assert lines[1].startswith("root 6 96 ")

    def test_cache_from_environment(
        self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        """$KFIB_CACHE_DIR is used when --cache-dir is absent."""
        monkeypatch.setenv("KFIB_CACHE_DIR", str(tmp_path))
        assert run_command(["root", "--k", "5", "--bits", "64", "--out", str(tmp_path / "r")]) == 0
        assert (tmp_path / "kfib.cache").exists()


class TestContainer:
    """Test dependency wiring."""

    def test_no_cache_by_default(self) -> None:
        """Without a cache directory there is no root cache."""
        container = build_container(RunConfig(command="root", k=4))
        assert container.root_cache() is None
        assert container.sweep_cursor() is None

    def test_singletons(self, tmp_path: Path) -> None:
        """One cache and one writer per invocation."""
        container = build_container(RunConfig(command="root", k=4, cache_dir=tmp_path))
        assert container.root_cache() is container.root_cache()
        assert container.result_writer() is container.result_writer()

    def test_override_writer(self, tmp_path: Path) -> None:
        """Tests can swap the writer."""
        out = tmp_path / "override.jsonl"
        config = RunConfig(command="fib", k=3, n=10, out=tmp_path / "ignored.jsonl")
        container = build_container(config)
        container.result_writer.override(ResultWriter(out))
        assert execute(config, container) == 0
        assert _json_rows(out.read_text()) == [{"k": 3, "n": 10, "value": "149"}]
        assert not (tmp_path / "ignored.jsonl").exists()

    def test_reduce_cursor(self, tmp_path: Path) -> None:
        """A reduce with --out gets a cursor next to the output."""
        config = RunConfig(command="reduce", case="gamma", k=4, out=tmp_path / "cells.jsonl")
        cursor = build_container(config).sweep_cursor()
        assert cursor is not None
        assert cursor.path == tmp_path / "cells.jsonl.cursor"
