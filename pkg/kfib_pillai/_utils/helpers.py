"""General helper utilities for the toolkit."""

from fractions import Fraction
import math
from typing import Any


def nearest_int(x: Fraction | int) -> int:
    """
    Round to the nearest integer, ties away from zero.

    Args:
        x: Exact rational value

    Returns:
        The integer closest to x
    """
    value = Fraction(x)
    if value >= 0:
        return math.floor(value + Fraction(1, 2))
    return -math.floor(-value + Fraction(1, 2))


def binomial(a: int, b: int) -> int:
    """Binomial coefficient with C(a, b) = 0 whenever a < b or an argument is negative."""
    if a < 0 or b < 0 or a < b:
        return 0
    return math.comb(a, b)


def is_power_of_two(value: int) -> bool:
    """Check whether a positive integer is a power of two."""
    return value > 0 and value & (value - 1) == 0


def floor_log2(value: Fraction) -> int:
    """Exact floor(log2(value)) for a positive rational."""
    if value <= 0:
        raise ValueError("floor_log2 needs a positive value")
    num, den = value.numerator, value.denominator
    estimate = num.bit_length() - den.bit_length()
    # estimate is floor or floor + 1
    if estimate >= 0:
        return estimate if num >= den << estimate else estimate - 1
    return estimate if num << -estimate >= den else estimate - 1


def create_cell_key(*parts: Any) -> str:
    """
    Create a stable key from multiple parts.

    Args:
        *parts: Parts to combine; None entries are skipped

    Returns:
        Key string such as ``"gamma3:4:12:7"``
    """
    return ":".join(str(part) for part in parts if part is not None)


def filter_none_values(d: dict[str, Any]) -> dict[str, Any]:
    """
    Filter out None values from a dictionary.

    Args:
        d: Dictionary to filter

    Returns:
        Dictionary with None values removed
    """
    return {k: v for k, v in d.items() if v is not None}
