"""Directed-rounding logarithms and square roots on dyadic intervals."""

from collections.abc import Callable
from fractions import Fraction
from functools import lru_cache
from typing import Any

import gmpy2

from .._core.exceptions import DomainError
from .._utils import floor_log2
from .dyadic import DyadicInterval, Number, from_mantissa_exponent

# working bits added on top of the interval precision
GUARD_BITS = 32


def _mpfr_bound(
    function: Callable[[Any], Any],
    value: Fraction,
    bits: int,
    upward: bool,
) -> Fraction:
    """
    Evaluate ``function(value)`` in MPFR with a directed rounding mode.

    The argument conversion and the function both round in the same
    direction, which is sound for monotone increasing functions.
    """
    with gmpy2.context(
        precision=bits,
        emin=gmpy2.get_emin_min(),
        emax=gmpy2.get_emax_max(),
        round=gmpy2.RoundUp if upward else gmpy2.RoundDown,
    ):
        argument = gmpy2.mpfr(gmpy2.mpq(value.numerator, value.denominator))
        result = function(argument)
    if gmpy2.is_zero(result):
        return Fraction(0)
    mantissa, exponent = result.as_mantissa_exp()
    return from_mantissa_exponent(int(mantissa), int(exponent))


@lru_cache(maxsize=64)
def ln2_interval(precision: int) -> DyadicInterval:
    """Enclosure of log 2."""
    bits = precision + GUARD_BITS
    two = Fraction(2)
    return DyadicInterval(
        _mpfr_bound(gmpy2.log, two, bits, upward=False),
        _mpfr_bound(gmpy2.log, two, bits, upward=True),
        precision,
    )


def log_interval(x: DyadicInterval | Number, precision: int | None = None) -> DyadicInterval:
    """
    Enclosure of the natural logarithm.

    The argument is reduced to x = 2^e y with y in [1, 2); log y is taken in
    MPFR under RoundDown/RoundUp and e log 2 is added with interval
    arithmetic.

    Args:
        x: Interval (or exact rational) with positive lower end
        precision: Result precision, defaults to the interval's own

    Raises:
        DomainError: If x.lo <= 0
    """
    if not isinstance(x, DyadicInterval):
        x = DyadicInterval.exact(x, precision or 256)
    precision = x.precision if precision is None else precision
    if x.lo <= 0:
        raise DomainError(
            "Logarithm of a non-positive interval",
            argument="x",
            value=float(x.lo),
            operation="log_interval",
        )
    bits = precision + GUARD_BITS
    ln2 = ln2_interval(precision)

    def reduced_log(endpoint: Fraction, upward: bool) -> DyadicInterval:
        exponent = floor_log2(endpoint)
        mantissa = endpoint / (Fraction(2) ** exponent)
        log_mantissa = _mpfr_bound(gmpy2.log, mantissa, bits, upward)
        return ln2 * exponent + DyadicInterval.exact(log_mantissa, bits)

    low = reduced_log(x.lo, upward=False)
    high = reduced_log(x.hi, upward=True)
    return DyadicInterval(low.lo, high.hi, precision)


def sqrt_interval(x: DyadicInterval | Number, precision: int | None = None) -> DyadicInterval:
    """
    Enclosure of the square root.

    Raises:
        DomainError: If x.lo < 0
    """
    if not isinstance(x, DyadicInterval):
        x = DyadicInterval.exact(x, precision or 256)
    precision = x.precision if precision is None else precision
    if x.lo < 0:
        raise DomainError(
            "Square root of a negative interval",
            argument="x",
            value=float(x.lo),
            operation="sqrt_interval",
        )
    bits = precision + GUARD_BITS
    return DyadicInterval(
        _mpfr_bound(gmpy2.sqrt, x.lo, bits, upward=False),
        _mpfr_bound(gmpy2.sqrt, x.hi, bits, upward=True),
        precision,
    )


def log2_ratio(x: DyadicInterval | Number, precision: int | None = None) -> DyadicInterval:
    """Enclosure of log(x) / log(2)."""
    log_x = log_interval(x, precision)
    return log_x / ln2_interval(log_x.precision)
