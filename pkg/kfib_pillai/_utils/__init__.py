"""Utility functions and helpers for the toolkit."""

from .helpers import (
    binomial,
    create_cell_key,
    filter_none_values,
    floor_log2,
    is_power_of_two,
    nearest_int,
)
from .logging import (
    configure_logging,
    get_logger,
    log_error,
    log_info,
    log_precision_escalation,
    log_root_computed,
    log_solution_found,
    log_sweep_cell,
    log_warning,
    logger,
)
from .validation import (
    MIN_PRECISION_BITS,
    validate_index,
    validate_order,
    validate_precision,
    validate_solution_order,
)

__all__ = [
    # Helpers
    "binomial",
    "create_cell_key",
    "filter_none_values",
    "floor_log2",
    "is_power_of_two",
    "nearest_int",
    # Logging
    "configure_logging",
    "get_logger",
    "log_error",
    "log_info",
    "log_precision_escalation",
    "log_root_computed",
    "log_solution_found",
    "log_sweep_cell",
    "log_warning",
    "logger",
    # Validation
    "MIN_PRECISION_BITS",
    "validate_index",
    "validate_order",
    "validate_precision",
    "validate_solution_order",
]
