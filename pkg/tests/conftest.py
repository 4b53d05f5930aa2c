"""Pytest configuration and shared fixtures for kfib_pillai tests."""

from collections.abc import Generator
from pathlib import Path

import pytest

from kfib_pillai import (
    EventCollector,
    PrecisionPolicy,
    RootCache,
    SearchConfig,
    SearchMode,
    reset_global_state,
)


@pytest.fixture(autouse=True)
def reset_toolkit_state() -> Generator[None, None, None]:
    """Automatically reset hooks, the root store and sequences around each test."""
    reset_global_state()
    yield
    reset_global_state()


@pytest.fixture
def event_collector() -> EventCollector:
    """Create a test event collector."""
    return EventCollector()


@pytest.fixture
def fast_policy() -> PrecisionPolicy:
    """A short precision ladder for tests that do not need 2200 bits."""
    return PrecisionPolicy(start_bits=256, max_doublings=3)


@pytest.fixture
def cache_path(tmp_path: Path) -> Path:
    """Location of a fresh root cache file."""
    return tmp_path / "cache" / "kfib.cache"


@pytest.fixture
def root_cache(cache_path: Path) -> RootCache:
    """An empty root cache backed by a temporary file."""
    return RootCache(cache_path)


@pytest.fixture
def k4_search_config() -> SearchConfig:
    """The k = 4, n <= 10 box with its five nonzero values of c."""
    return SearchConfig(k_min=4, k_max=4, n_max=10, mode=SearchMode.NAIVE)
