"""Testing utilities."""

from .fixtures import EventCollector, clear_computation_caches, reset_global_state

__all__ = [
    "EventCollector",
    "clear_computation_caches",
    "reset_global_state",
]
