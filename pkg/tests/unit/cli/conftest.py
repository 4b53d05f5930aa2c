"""Fixtures for command-line tests."""

import pytest

from kfib_pillai._cli import CACHE_DIR_ENV


@pytest.fixture(autouse=True)
def no_cache_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """Keep the caller's cache directory out of every test."""
    monkeypatch.delenv(CACHE_DIR_ENV, raising=False)
