"""Dyadic rationals and certified intervals with outward rounding."""

from __future__ import annotations

from fractions import Fraction
import math

from .._core.exceptions import DomainError, PrecisionError
from .._utils import is_power_of_two

Number = int | Fraction

DEFAULT_PRECISION = 256


def round_dyadic(value: Number, bits: int, upward: bool) -> Fraction:
    """
    Round a rational to a dyadic rational with about ``bits`` significant bits.

    Args:
        value: Exact rational
        bits: Significant bits to keep
        upward: Round toward +inf when True, toward -inf otherwise

    Returns:
        A Fraction whose denominator is a power of two
    """
    value = Fraction(value)
    num, den = value.numerator, value.denominator
    if num == 0:
        return Fraction(0)
    if is_power_of_two(den) and abs(num).bit_length() <= bits:
        return value

    shift = bits - (abs(num).bit_length() - den.bit_length())
    if shift >= 0:
        scaled_num, scaled_den = num << shift, den
    else:
        scaled_num, scaled_den = num, den << -shift
    quotient, remainder = divmod(scaled_num, scaled_den)
    if upward and remainder:
        quotient += 1
    if shift >= 0:
        return Fraction(quotient, 1 << shift)
    return Fraction(quotient << -shift)


def mantissa_exponent(value: Fraction) -> tuple[int, int]:
    """
    Split a dyadic rational into (mantissa, exponent) with value = mantissa * 2^exponent.

    The mantissa is odd unless the value is zero.

    Raises:
        DomainError: If the denominator is not a power of two
    """
    if value == 0:
        return 0, 0
    den = value.denominator
    if not is_power_of_two(den):
        raise DomainError("Value is not dyadic", argument="value", value=value)
    mantissa = value.numerator
    exponent = -(den.bit_length() - 1)
    trailing = (mantissa & -mantissa).bit_length() - 1
    return mantissa >> trailing, exponent + trailing


def from_mantissa_exponent(mantissa: int, exponent: int) -> Fraction:
    """Inverse of :func:`mantissa_exponent`."""
    if exponent >= 0:
        return Fraction(mantissa << exponent)
    return Fraction(mantissa, 1 << -exponent)


class DyadicInterval:
    """
    Certified real interval [lo, hi] with dyadic endpoints.

    Every operation returns an enclosure of all exact results: endpoints are
    computed exactly and then rounded outward to ``precision`` significant
    bits. Binary operations use the larger precision of the two operands.
    """

    __slots__ = ("hi", "lo", "precision")

    def __init__(self, lo: Number, hi: Number, precision: int = DEFAULT_PRECISION) -> None:
        lo = Fraction(lo)
        hi = Fraction(hi)
        if lo > hi:
            raise DomainError(
                "Interval endpoints are reversed",
                details=f"lo={float(lo)}, hi={float(hi)}",
            )
        self.lo = round_dyadic(lo, precision, upward=False)
        self.hi = round_dyadic(hi, precision, upward=True)
        self.precision = precision

    @classmethod
    def exact(cls, value: Number, precision: int = DEFAULT_PRECISION) -> DyadicInterval:
        """Tightest enclosure of a single rational."""
        return cls(value, value, precision)

    @classmethod
    def from_mantissas(
        cls,
        lo: tuple[int, int],
        hi: tuple[int, int],
        precision: int,
    ) -> DyadicInterval:
        """Rebuild an interval from (mantissa, exponent) pairs without rounding."""
        interval = cls.__new__(cls)
        interval.lo = from_mantissa_exponent(*lo)
        interval.hi = from_mantissa_exponent(*hi)
        interval.precision = precision
        if interval.lo > interval.hi:
            raise DomainError("Interval endpoints are reversed")
        return interval

    def _coerce(self, other: DyadicInterval | Number) -> DyadicInterval:
        if isinstance(other, DyadicInterval):
            return other
        return DyadicInterval.exact(other, self.precision)

    # Geometry

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def mantissas(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Both endpoints as (mantissa, exponent) pairs."""
        return mantissa_exponent(self.lo), mantissa_exponent(self.hi)

    def contains(self, value: Number | DyadicInterval) -> bool:
        """Whether a point (or a whole interval) lies inside."""
        if isinstance(value, DyadicInterval):
            return self.lo <= value.lo and value.hi <= self.hi
        return self.lo <= value <= self.hi

    def is_nested_in(self, other: DyadicInterval) -> bool:
        return other.contains(self)

    def is_positive(self) -> bool:
        return self.lo > 0

    def is_negative(self) -> bool:
        return self.hi < 0

    def certainly_lt(self, other: DyadicInterval | Number) -> bool:
        """Every point of self is below every point of other."""
        return self.hi < self._coerce(other).lo

    def certainly_gt(self, other: DyadicInterval | Number) -> bool:
        """Every point of self is above every point of other."""
        return self.lo > self._coerce(other).hi

    def floor(self) -> int:
        """
        Common floor of every point.

        Raises:
            PrecisionError: If the interval straddles an integer
        """
        low, high = math.floor(self.lo), math.floor(self.hi)
        if low != high:
            raise PrecisionError(
                "Interval straddles an integer",
                precision_bits=self.precision,
                details=f"floor in [{low}, {high}]",
                operation="floor",
            )
        return low

    def ceil(self) -> int:
        """
        Common ceiling of every point.

        Raises:
            PrecisionError: If the interval straddles an integer
        """
        low, high = math.ceil(self.lo), math.ceil(self.hi)
        if low != high:
            raise PrecisionError(
                "Interval straddles an integer",
                precision_bits=self.precision,
                details=f"ceil in [{low}, {high}]",
                operation="ceil",
            )
        return low

    def with_precision(self, precision: int) -> DyadicInterval:
        """Same enclosure carried at another precision (rounded outward if shorter)."""
        return DyadicInterval(self.lo, self.hi, precision)

    # Arithmetic

    def __neg__(self) -> DyadicInterval:
        return DyadicInterval(-self.hi, -self.lo, self.precision)

    def __abs__(self) -> DyadicInterval:
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return DyadicInterval(0, max(-self.lo, self.hi), self.precision)

    def __add__(self, other: DyadicInterval | Number) -> DyadicInterval:
        o = self._coerce(other)
        return DyadicInterval(
            self.lo + o.lo, self.hi + o.hi, max(self.precision, o.precision)
        )

    __radd__ = __add__

    def __sub__(self, other: DyadicInterval | Number) -> DyadicInterval:
        o = self._coerce(other)
        return DyadicInterval(
            self.lo - o.hi, self.hi - o.lo, max(self.precision, o.precision)
        )

    def __rsub__(self, other: Number) -> DyadicInterval:
        return self._coerce(other) - self

    def __mul__(self, other: DyadicInterval | Number) -> DyadicInterval:
        o = self._coerce(other)
        products = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return DyadicInterval(
            min(products), max(products), max(self.precision, o.precision)
        )

    __rmul__ = __mul__

    def __truediv__(self, other: DyadicInterval | Number) -> DyadicInterval:
        o = self._coerce(other)
        if o.lo <= 0 <= o.hi:
            raise PrecisionError(
                "Divisor interval contains zero",
                precision_bits=o.precision,
                operation="divide",
            )
        quotients = (self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi)
        return DyadicInterval(
            min(quotients), max(quotients), max(self.precision, o.precision)
        )

    def __rtruediv__(self, other: Number) -> DyadicInterval:
        return self._coerce(other) / self

    def __pow__(self, exponent: int) -> DyadicInterval:
        """
        Integer power by repeated squaring, rounding outward at every step.

        x^0 is exactly [1, 1].
        """
        if exponent < 0:
            return 1 / (self**-exponent)
        if exponent == 0:
            return DyadicInterval(1, 1, self.precision)
        if self.lo >= 0:
            return DyadicInterval(
                _power_bound(self.lo, exponent, self.precision, upward=False),
                _power_bound(self.hi, exponent, self.precision, upward=True),
                self.precision,
            )
        if self.hi <= 0:
            magnitude = (-self) ** exponent
            return -magnitude if exponent % 2 else magnitude
        if exponent % 2 == 0:
            return DyadicInterval(0, max(-self.lo, self.hi), self.precision) ** exponent
        # odd powers are increasing
        return DyadicInterval(
            -_power_bound(-self.lo, exponent, self.precision, upward=True),
            _power_bound(self.hi, exponent, self.precision, upward=True),
            self.precision,
        )

    # Comparison and display

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DyadicInterval):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    def __float__(self) -> float:
        return float(self.midpoint)

    def __repr__(self) -> str:
        return (
            f"DyadicInterval({float(self.lo)!r}, {float(self.hi)!r}, "
            f"precision={self.precision})"
        )


def _power_bound(base: Fraction, exponent: int, bits: int, upward: bool) -> Fraction:
    """Directed bound on base^exponent for base >= 0."""
    result = Fraction(1)
    square = base
    while exponent:
        if exponent & 1:
            result = round_dyadic(result * square, bits, upward)
        exponent >>= 1
        if exponent:
            square = round_dyadic(square * square, bits, upward)
    return result
