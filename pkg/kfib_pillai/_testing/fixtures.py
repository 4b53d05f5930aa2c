"""Test fixtures and utilities for the toolkit."""

from typing import Any

from .._algebraic import clear_root_cache, set_root_store
from .._hooks import EventHook, clear_all_hooks, register_hook, set_hooks_enabled
from .._reduction import clear_reduction_cache, set_quotient_store
from .._search import clear_slope_cache
from .._sequence import clear_sequence_cache
from .._utils import get_logger

logger = get_logger(__name__)


def reset_global_state() -> None:
    """
    Reset mutable global state between tests.

    Hooks are cleared and re-enabled, the default root and quotient stores are removed and
    the shared sequences are dropped. Pure memoized results (roots, bounds,
    reduction contexts) are kept; use :func:`clear_computation_caches` when a
    test needs to observe a fresh computation.
    """
    clear_all_hooks()
    set_hooks_enabled(True)
    set_root_store(None)
    set_quotient_store(None)
    clear_sequence_cache()
    logger.debug("Reset global toolkit state for testing")


def clear_computation_caches() -> None:
    """Forget every memoized root, slope and reduction context."""
    clear_root_cache()
    clear_slope_cache()
    clear_reduction_cache()


class EventCollector:
    """Utility for collecting events during tests."""

    def __init__(self) -> None:
        self.events: list[dict[str, Any]] = []

    def subscribe(self, *events: EventHook) -> "EventCollector":
        """Register on the given events; each collected event carries its ``event_type``."""
        for event in events:
            register_hook(event, self._collector_for(event))
        return self

    def _collector_for(self, event: EventHook) -> Any:
        def collect(event_data: dict[str, Any]) -> None:
            self.collect_event({**event_data, "event_type": event.value})

        return collect

    def collect_event(self, event_data: dict[str, Any]) -> None:
        """Collect an event."""
        self.events.append(event_data.copy())

    def get_events(self) -> list[dict[str, Any]]:
        """Get collected events."""
        return self.events.copy()

    def get_events_by_type(self, event_type: EventHook) -> list[dict[str, Any]]:
        return [event for event in self.events if event.get("event_type") == event_type.value]

    def clear_events(self) -> None:
        self.events.clear()

    def get_event_count(self) -> int:
        return len(self.events)

    def assert_event_count(self, expected_count: int) -> None:
        """Assert the number of collected events."""
        actual_count = len(self.events)
        if actual_count != expected_count:
            raise AssertionError(f"Expected {expected_count} events, but got {actual_count}")

    def assert_has_event(self, **event_filters: Any) -> None:
        """Assert that an event with specific properties was collected."""
        for event in self.events:
            if all(event.get(key) == value for key, value in event_filters.items()):
                return
        raise AssertionError(f"No event found matching filters: {event_filters}")
