"""Argument validation shared by the public operations."""

from .._core.exceptions import DomainError
from .logging import get_logger

logger = get_logger(__name__)

MIN_PRECISION_BITS = 16


def validate_order(k: int, minimum: int = 2, operation: str | None = None) -> None:
    """
    Validate a recursion order k.

    Args:
        k: The recursion order
        minimum: Smallest admissible order for the calling operation
        operation: Operation name for error reporting

    Raises:
        DomainError: If k is not an integer or is below the minimum
    """
    if isinstance(k, bool) or not isinstance(k, int):
        raise DomainError(
            f"Order k must be an integer, got {type(k).__name__}",
            argument="k",
            value=k,
            operation=operation,
        )
    if k < minimum:
        raise DomainError(
            f"Order k must be at least {minimum}, got {k}",
            argument="k",
            value=k,
            k=k,
            operation=operation,
        )


def validate_index(
    k: int,
    n: int,
    minimum: int,
    operation: str | None = None,
    maximum: int | None = None,
) -> None:
    """
    Validate a sequence index against the range where a formula is asserted.

    Raises:
        DomainError: If n falls outside [minimum, maximum]
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(
            f"Index n must be an integer, got {type(n).__name__}",
            argument="n",
            value=n,
            k=k,
            operation=operation,
        )
    if n < minimum or (maximum is not None and n > maximum):
        upper = "inf" if maximum is None else str(maximum)
        raise DomainError(
            f"Index n={n} outside [{minimum}, {upper}]",
            argument="n",
            value=n,
            k=k,
            operation=operation,
        )


def validate_precision(precision_bits: int, operation: str | None = None) -> None:
    """
    Validate a working precision.

    Raises:
        DomainError: If fewer than 16 bits are requested
    """
    if isinstance(precision_bits, bool) or not isinstance(precision_bits, int):
        raise DomainError(
            "Precision must be an integer number of bits",
            argument="precision_bits",
            value=precision_bits,
            operation=operation,
        )
    if precision_bits < MIN_PRECISION_BITS:
        raise DomainError(
            f"Precision must be at least {MIN_PRECISION_BITS} bits, got {precision_bits}",
            argument="precision_bits",
            value=precision_bits,
            operation=operation,
        )


def validate_solution_order(
    k: int, n: int, m: int, n1: int, m1: int
) -> str | None:
    """
    Check the ordering n > n1 >= 2 and m > m1 >= 0.

    Returns:
        None when the ordering holds, otherwise a description of the violation
    """
    if not n > n1:
        return f"n={n} must exceed n1={n1}"
    if n1 < 2:
        return f"n1={n1} must be at least 2"
    if not m > m1:
        return f"m={m} must exceed m1={m1}"
    if m1 < 0:
        return f"m1={m1} must be non-negative"
    logger.debug("Solution ordering valid", k=k, n=n, m=m, n1=n1, m1=m1)
    return None
