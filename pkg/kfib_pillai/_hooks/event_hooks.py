"""Event hooks for observing long-running computations."""

from collections import defaultdict
from collections.abc import Callable
from enum import Enum
from threading import RLock
from typing import Any

from .._utils import get_logger, log_error

logger = get_logger(__name__)


class EventHook(Enum):
    """Enumeration of available event hooks."""

    # Root events
    ROOT_COMPUTED = "root_computed"
    ROOT_CACHE_HIT = "root_cache_hit"
    QUOTIENT_CACHE_HIT = "quotient_cache_hit"
    PRECISION_ESCALATED = "precision_escalated"

    # Search events
    SOLUTION_FOUND = "solution_found"
    FAMILY_DISCREPANCY = "family_discrepancy"

    # Sweep events
    SWEEP_CELL_COMPLETED = "sweep_cell_completed"
    SWEEP_CELL_FAILED = "sweep_cell_failed"

    # Error events
    ERROR_OCCURRED = "error_occurred"


HookFunction = Callable[[dict[str, Any]], None]


class EventHookManager:
    """
    Manager for event hooks.

    Sweeps and searches emit events here; tests and the CLI subscribe to
    count cache hits, escalations and failed cells without parsing logs.
    """

    def __init__(self) -> None:
        self._hooks: dict[EventHook, list[HookFunction]] = defaultdict(list)
        self._enabled = True
        self._lock = RLock()

    def register_hook(self, event: EventHook, hook_function: HookFunction) -> None:
        """
        Register a hook function for an event.

        Args:
            event: The event to hook into
            hook_function: Function to call when event occurs
        """
        if not callable(hook_function):
            raise ValueError("Hook function must be callable")

        with self._lock:
            self._hooks[event].append(hook_function)
        logger.debug(
            "Registered event hook",
            event_type=event.value,
            hook_function=getattr(hook_function, "__name__", repr(hook_function)),
        )

    def unregister_hook(self, event: EventHook, hook_function: HookFunction) -> bool:
        """
        Unregister a hook function for an event.

        Returns:
            True if the hook was removed, False if it wasn't registered
        """
        with self._lock:
            if hook_function in self._hooks[event]:
                self._hooks[event].remove(hook_function)
                return True
        return False

    def emit(self, event: EventHook, event_data: dict[str, Any]) -> None:
        """
        Emit an event to all registered hooks.

        A failing hook is logged and skipped; the remaining hooks still run.
        """
        if not self._enabled:
            return

        with self._lock:
            hooks = list(self._hooks.get(event, ()))
        if not hooks:
            return

        for hook_function in hooks:
            try:
                hook_function(event_data)
            except Exception as e:
                log_error(
                    "event_hook_execution",
                    e,
                    hook_function=getattr(hook_function, "__name__", "?"),
                    event_type=event.value,
                )

    def get_hook_count(self, event: EventHook | None = None) -> int:
        """Get the number of registered hooks, optionally for one event."""
        with self._lock:
            if event is None:
                return sum(len(hooks) for hooks in self._hooks.values())
            return len(self._hooks.get(event, ()))

    def clear_hooks(self, event: EventHook | None = None) -> None:
        """Clear hooks for an event or all events."""
        with self._lock:
            if event is None:
                self._hooks.clear()
            else:
                self._hooks.pop(event, None)

    def set_enabled(self, enabled: bool) -> None:
        """Enable or disable hook execution."""
        self._enabled = enabled

    def is_enabled(self) -> bool:
        """Check if hook execution is enabled."""
        return self._enabled


_global_hook_manager = EventHookManager()


def get_hook_manager() -> EventHookManager:
    """Get the global hook manager instance."""
    return _global_hook_manager


def register_hook(event: EventHook, hook_function: HookFunction) -> None:
    """Register a hook function on the global manager."""
    _global_hook_manager.register_hook(event, hook_function)


def unregister_hook(event: EventHook, hook_function: HookFunction) -> bool:
    """Unregister a hook function from the global manager."""
    return _global_hook_manager.unregister_hook(event, hook_function)


def emit_event(event: EventHook, event_data: dict[str, Any]) -> None:
    """Emit an event on the global manager."""
    _global_hook_manager.emit(event, event_data)


def clear_all_hooks() -> None:
    """Clear all registered hooks."""
    _global_hook_manager.clear_hooks()


def set_hooks_enabled(enabled: bool) -> None:
    """Enable or disable hook execution globally."""
    _global_hook_manager.set_enabled(enabled)
