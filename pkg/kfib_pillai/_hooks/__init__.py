"""Event hooks for extensibility and instrumentation."""

from .event_hooks import (
    EventHook,
    EventHookManager,
    HookFunction,
    clear_all_hooks,
    emit_event,
    get_hook_manager,
    register_hook,
    set_hooks_enabled,
    unregister_hook,
)

__all__ = [
    "EventHook",
    "EventHookManager",
    "HookFunction",
    "clear_all_hooks",
    "emit_event",
    "get_hook_manager",
    "register_hook",
    "set_hooks_enabled",
    "unregister_hook",
]
