"""Tests for testing utilities."""

import pytest

from kfib_pillai import (
    EventCollector,
    EventHook,
    emit_event,
    get_hook_manager,
    get_sequence,
    register_hook,
    reset_global_state,
    set_hooks_enabled,
    set_root_store,
)
from kfib_pillai._algebraic import get_root_store
from kfib_pillai._cli import RootCache


class TestResetGlobalState:
    """Test reset_global_state."""

    def test_clears_hooks_and_reenables(self) -> None:
        """Hooks are removed and emission is re-enabled."""
        register_hook(EventHook.ROOT_COMPUTED, lambda data: None)
        set_hooks_enabled(False)
        reset_global_state()
        assert get_hook_manager().get_hook_count() == 0
        assert get_hook_manager().is_enabled()

    def test_removes_root_store(self, root_cache: RootCache) -> None:
        """The default root store does not leak between tests."""
        set_root_store(root_cache)
        reset_global_state()
        assert get_root_store() is None

    def test_drops_sequences(self) -> None:
        """Shared sequences are rebuilt after a reset."""
        first = get_sequence(4)
        reset_global_state()
        assert get_sequence(4) is not first


class TestEventCollector:
    """Test EventCollector."""

    def test_subscribe_tags_event_type(self, event_collector: EventCollector) -> None:
        """Subscribed events arrive tagged with their type."""
        event_collector.subscribe(EventHook.SOLUTION_FOUND, EventHook.ROOT_CACHE_HIT)
        emit_event(EventHook.SOLUTION_FOUND, {"k": 4})
        emit_event(EventHook.ROOT_CACHE_HIT, {"k": 5})
        emit_event(EventHook.ROOT_COMPUTED, {"k": 6})
        event_collector.assert_event_count(2)
        assert event_collector.get_events_by_type(EventHook.ROOT_CACHE_HIT) == [
            {"k": 5, "event_type": "root_cache_hit"}
        ]
        event_collector.assert_has_event(event_type="solution_found", k=4)

    def test_manual_collection(self, event_collector: EventCollector) -> None:
        """Events can be collected directly and cleared."""
        event_collector.collect_event({"k": 4})
        assert event_collector.get_event_count() == 1
        event_collector.clear_events()
        assert event_collector.get_events() == []

    def test_assertions_fail_loudly(self, event_collector: EventCollector) -> None:
        """Failed expectations raise AssertionError."""
        with pytest.raises(AssertionError):
            event_collector.assert_event_count(1)
        with pytest.raises(AssertionError):
            event_collector.assert_has_event(k=4)
