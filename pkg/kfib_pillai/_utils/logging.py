"""Structured logging utilities for the toolkit."""

import logging
import sys
from typing import Any

import structlog


def configure_logging(level: int = logging.WARNING) -> None:
    """Configure structlog; stdout is reserved for command output, so logs go to stderr."""
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.StackInfoRenderer(),
            structlog.dev.set_exc_info,
            structlog.processors.TimeStamper(fmt="ISO"),
            structlog.dev.ConsoleRenderer(),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(level),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )


configure_logging()


def get_logger(name: str) -> structlog.BoundLogger:
    """Get a structured logger for the given name."""
    return structlog.get_logger(name)  # type: ignore[no-any-return]


logger = get_logger("kfib_pillai")


def log_root_computed(
    k: int,
    precision_bits: int,
    source: str,
    elapsed_ms: float,
    **extra: Any,
) -> None:
    """Log a dominant-root enclosure, noting whether it came from bisection or cache."""
    logger.debug(
        "Dominant root ready",
        k=k,
        precision_bits=precision_bits,
        source=source,
        elapsed_ms=round(elapsed_ms, 3),
        **extra,
    )


def log_precision_escalation(
    operation: str,
    from_bits: int,
    to_bits: int,
    reason: str,
    k: int | None = None,
    **extra: Any,
) -> None:
    """Log a precision-ladder step."""
    logger.info(
        "Precision escalated",
        operation=operation,
        from_bits=from_bits,
        to_bits=to_bits,
        reason=reason,
        k=k,
        **extra,
    )


def log_solution_found(
    k: int,
    c: int,
    n: int,
    m: int,
    n1: int,
    m1: int,
    family: str,
    **extra: Any,
) -> None:
    """Log a verified solution tuple."""
    logger.debug(
        "Solution verified",
        k=k,
        c=str(c),
        n=n,
        m=m,
        n1=n1,
        m1=m1,
        family=family,
        **extra,
    )


def log_sweep_cell(
    case: str,
    k: int,
    l: int | None,  # noqa: E741
    j: int | None,
    w_bound: int | None,
    status: str,
    **extra: Any,
) -> None:
    """Log one reduction-sweep cell."""
    logger.debug(
        "Sweep cell finished",
        case=case,
        k=k,
        l=l,
        j=j,
        w_bound=w_bound,
        status=status,
        **extra,
    )


def log_error(
    operation: str,
    error: Exception,
    k: int | None = None,
    **extra: Any,
) -> None:
    """Log errors with context information."""
    logger.error(
        "Toolkit operation failed",
        operation=operation,
        error=str(error),
        error_type=type(error).__name__,
        k=k,
        **extra,
    )


def log_warning(
    message: str,
    k: int | None = None,
    **extra: Any,
) -> None:
    """Log warnings with context information."""
    logger.warning(message, k=k, **extra)


def log_info(
    message: str,
    k: int | None = None,
    **extra: Any,
) -> None:
    """Log informational messages."""
    logger.info(message, k=k, **extra)
