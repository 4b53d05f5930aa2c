"""Tests for dyadic rationals and certified intervals."""

from fractions import Fraction

import pytest

from kfib_pillai import DomainError, DyadicInterval, PrecisionError
from kfib_pillai._algebraic import from_mantissa_exponent, mantissa_exponent, round_dyadic


class TestRounding:
    """Test directed rounding to dyadic rationals."""

    def test_rounds_outward(self) -> None:
        """1/3 is bracketed by its downward and upward roundings."""
        down = round_dyadic(Fraction(1, 3), 20, upward=False)
        up = round_dyadic(Fraction(1, 3), 20, upward=True)
        assert down < Fraction(1, 3) < up
        assert up - down <= Fraction(1, 2**20)

    def test_short_dyadic_unchanged(self) -> None:
        """Values that already fit are kept exactly."""
        assert round_dyadic(Fraction(5, 8), 8, upward=True) == Fraction(5, 8)

    def test_large_integer_rounded(self) -> None:
        """Integers wider than the precision get rounded too."""
        value = 2**40 + 1
        assert round_dyadic(value, 8, upward=False) == 2**40
        assert round_dyadic(value, 8, upward=True) > value

    def test_mantissa_exponent(self) -> None:
        """The mantissa is odd and the split is invertible."""
        assert mantissa_exponent(Fraction(12, 32)) == (3, -3)
        assert from_mantissa_exponent(3, -3) == Fraction(3, 8)
        assert mantissa_exponent(Fraction(0)) == (0, 0)

    def test_non_dyadic_rejected(self) -> None:
        """1/3 has no finite binary expansion."""
        with pytest.raises(DomainError):
            mantissa_exponent(Fraction(1, 3))


class TestDyadicInterval:
    """Test interval construction and queries."""

    def test_exact_enclosure(self) -> None:
        """An exact interval of 1/3 contains 1/3."""
        third = DyadicInterval.exact(Fraction(1, 3), 64)
        assert third.contains(Fraction(1, 3))
        assert 0 < third.width < Fraction(1, 2**60)

    def test_reversed_endpoints(self) -> None:
        """lo > hi is rejected."""
        with pytest.raises(DomainError):
            DyadicInterval(2, 1)

    def test_from_mantissas_round_trip(self) -> None:
        """Rebuilding from mantissas gives the same endpoints."""
        interval = DyadicInterval(Fraction(1, 3), Fraction(2, 3), 80)
        lo, hi = interval.mantissas()
        assert DyadicInterval.from_mantissas(lo, hi, 80) == interval

    def test_ordering_queries(self) -> None:
        """certainly_lt and certainly_gt need disjoint intervals."""
        small = DyadicInterval(1, 2)
        large = DyadicInterval(3, 4)
        overlapping = DyadicInterval(Fraction(3, 2), 3)
        assert small.certainly_lt(large)
        assert large.certainly_gt(small)
        assert not small.certainly_lt(overlapping)
        assert small.is_positive()
        assert (-small).is_negative()

    def test_nesting(self) -> None:
        """A narrower interval nests in a wider one."""
        assert DyadicInterval(2, 3).is_nested_in(DyadicInterval(1, 4))
        assert not DyadicInterval(0, 3).is_nested_in(DyadicInterval(1, 4))

    def test_floor_and_ceil(self) -> None:
        """Floor and ceiling are returned when they are common to all points."""
        interval = DyadicInterval(Fraction(9, 4), Fraction(11, 4))
        assert interval.floor() == 2
        assert interval.ceil() == 3

    def test_floor_straddling(self) -> None:
        """An interval across an integer has no certified floor."""
        with pytest.raises(PrecisionError):
            DyadicInterval(Fraction(7, 4), Fraction(9, 4)).floor()
        with pytest.raises(PrecisionError):
            DyadicInterval(Fraction(7, 4), Fraction(9, 4)).ceil()

    def test_float_is_midpoint(self) -> None:
        """float() gives the midpoint."""
        assert float(DyadicInterval(1, 2)) == 1.5


class TestIntervalArithmetic:
    """Test that every operation encloses the exact result."""

    def test_sum_and_difference(self) -> None:
        """Endpoints combine in the enclosing direction."""
        a = DyadicInterval(1, 2)
        b = DyadicInterval(3, 5)
        assert (a + b) == DyadicInterval(4, 7)
        assert (a - b) == DyadicInterval(-4, -1)
        assert (10 - a) == DyadicInterval(8, 9)

    def test_product_with_sign_change(self) -> None:
        """Products take the extreme endpoint products."""
        assert DyadicInterval(-1, 2) * DyadicInterval(3, 4) == DyadicInterval(-4, 8)

    def test_division_encloses(self) -> None:
        """1/3 lies in [1, 1] / [3, 3]."""
        quotient = DyadicInterval(1, 1, 64) / 3
        assert quotient.contains(Fraction(1, 3))

    def test_division_by_zero_interval(self) -> None:
        """Dividing by an interval containing 0 cannot be certified."""
        with pytest.raises(PrecisionError):
            DyadicInterval(1, 2) / DyadicInterval(-1, 1)

    def test_powers(self) -> None:
        """Powers enclose the exact value, including even powers across zero."""
        third = DyadicInterval.exact(Fraction(1, 3), 128)
        assert (third**5).contains(Fraction(1, 243))
        assert (third**-2).contains(9)
        assert DyadicInterval(-2, 1) ** 2 == DyadicInterval(0, 4)
        assert DyadicInterval(-2, 1) ** 3 == DyadicInterval(-8, 1)
        assert DyadicInterval(-3, -2) ** 0 == DyadicInterval(1, 1)

    def test_abs(self) -> None:
        """abs of an interval across zero starts at zero."""
        assert abs(DyadicInterval(-3, 1)) == DyadicInterval(0, 3)
        assert abs(DyadicInterval(-3, -1)) == DyadicInterval(1, 3)

    def test_precision_propagates(self) -> None:
        """Binary operations keep the larger precision."""
        assert (DyadicInterval(1, 2, 64) + DyadicInterval(1, 2, 128)).precision == 128
