"""Result writer and sweep cursor for the command-line front end."""

import csv
import json
from pathlib import Path
import sys
from threading import Lock
from types import TracebackType
from typing import Any, TextIO

from .._base import OutputFormat, ReductionCase
from .._core.exceptions import CacheError
from .._reduction import SweepProgress
from .._utils import get_logger

logger = get_logger(__name__)


class ResultWriter:
    """
    Single funnel for every row the CLI produces.

    Rows go to ``path`` when given, otherwise to stdout. JSON output is one
    object per line with keys sorted; CSV output writes a header taken from
    ``columns`` (or the first row) and ignores keys outside it.
    """

    def __init__(
        self,
        path: Path | None = None,
        output_format: OutputFormat = OutputFormat.JSON,
        columns: tuple[str, ...] | None = None,
        append: bool = False,
    ) -> None:
        self.path = path
        self.output_format = output_format
        self.columns = columns
        self.rows_written = 0
        self._lock = Lock()
        self._stream: TextIO | None = None
        self._csv: csv.DictWriter[str] | None = None
        self._append = append

    def _open(self, first_row: dict[str, Any]) -> TextIO:
        if self._stream is None:
            if self.path is None:
                self._stream = sys.stdout
            else:
                self.path.parent.mkdir(parents=True, exist_ok=True)
                self._stream = self.path.open(
                    "a" if self._append else "w", encoding="utf-8", newline=""
                )
            if self.output_format is OutputFormat.CSV:
                columns = self.columns or tuple(first_row)
                self._csv = csv.DictWriter(
                    self._stream, fieldnames=list(columns), extrasaction="ignore"
                )
                resumed = self._append and self.path is not None and self.path.stat().st_size
                if not resumed:
                    self._csv.writeheader()
        return self._stream

    def write_row(self, row: dict[str, Any]) -> None:
        with self._lock:
            stream = self._open(row)
            if self._csv is not None:
                self._csv.writerow(row)
            else:
                stream.write(json.dumps(row, sort_keys=True) + "\n")
            stream.flush()
            self.rows_written += 1

    def write_rows(self, rows: list[dict[str, Any]]) -> None:
        for row in rows:
            self.write_row(row)

    def close(self) -> None:
        with self._lock:
            if self._stream is not None and self._stream is not sys.stdout:
                self._stream.close()
            self._stream = None
            self._csv = None
        if self.path is not None:
            logger.debug("Results written", path=str(self.path), rows=self.rows_written)

    def __enter__(self) -> "ResultWriter":
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc_val: BaseException | None,
        exc_tb: TracebackType | None,
    ) -> None:
        self.close()


class SweepCursor:
    """
    Progress of every sweep of one invocation, kept in one JSON file.

    The file maps ``<case>:<k>`` to a SweepProgress and is rewritten after
    each cell, so an interrupted sweep resumes after its last finished cell.
    """

    def __init__(self, path: Path) -> None:
        self.path = path
        self._entries: dict[str, SweepProgress] = {}
        if path.exists():
            self._load()

    @staticmethod
    def _key(case: ReductionCase, k: int) -> str:
        return f"{case.value}:{k}"

    def _load(self) -> None:
        try:
            raw = json.loads(self.path.read_text(encoding="utf-8"))
            self._entries = {key: SweepProgress.model_validate(value) for key, value in raw.items()}
        except (ValueError, AttributeError) as error:
            raise CacheError(
                "Corrupt sweep cursor", path=str(self.path), details=str(error)
            ) from error

    def load_progress(self, case: ReductionCase, k: int) -> SweepProgress | None:
        progress = self._entries.get(self._key(case, k))
        return progress.model_copy(deep=True) if progress is not None else None

    def save_progress(self, progress: SweepProgress) -> None:
        self._entries[self._key(progress.case, progress.k)] = progress.model_copy(deep=True)
        payload = {key: value.model_dump(mode="json") for key, value in self._entries.items()}
        temporary = self.path.with_name(self.path.name + ".tmp")
        temporary.write_text(json.dumps(payload, sort_keys=True, indent=2), encoding="utf-8")
        temporary.replace(self.path)

    def clear(self) -> None:
        self._entries.clear()
        self.path.unlink(missing_ok=True)
