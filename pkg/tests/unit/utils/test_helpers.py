"""Tests for helper utilities."""

from fractions import Fraction

import pytest

from kfib_pillai._utils import (
    binomial,
    create_cell_key,
    filter_none_values,
    floor_log2,
    is_power_of_two,
    nearest_int,
)


class TestNearestInt:
    """Test rounding to the nearest integer."""

    @pytest.mark.parametrize(
        ("value", "expected"),
        [
            (Fraction(7, 3), 2),
            (Fraction(5, 2), 3),
            (Fraction(-5, 2), -3),
            (Fraction(-7, 3), -2),
            (0, 0),
            (12, 12),
        ],
    )
    def test_nearest_int(self, value: Fraction | int, expected: int) -> None:
        """Ties round away from zero."""
        assert nearest_int(value) == expected


class TestBinomial:
    """Test the extended binomial coefficient."""

    def test_regular_values(self) -> None:
        """Ordinary arguments agree with the usual coefficient."""
        assert binomial(5, 2) == 10
        assert binomial(10, 0) == 1

    def test_out_of_range_is_zero(self) -> None:
        """Negative arguments and a < b give zero."""
        assert binomial(2, 5) == 0
        assert binomial(-1, 0) == 0
        assert binomial(4, -2) == 0


class TestPowersOfTwo:
    """Test power-of-two helpers."""

    def test_is_power_of_two(self) -> None:
        """Only positive powers of two qualify."""
        assert [value for value in range(-2, 17) if is_power_of_two(value)] == [1, 2, 4, 8, 16]

    @pytest.mark.parametrize(
        ("value", "expected"),
        [
            (Fraction(1), 0),
            (Fraction(3, 2), 0),
            (Fraction(2), 1),
            (Fraction(1023), 9),
            (Fraction(1024), 10),
            (Fraction(1, 3), -2),
            (Fraction(1, 4), -2),
            (Fraction(3, 8), -2),
        ],
    )
    def test_floor_log2(self, value: Fraction, expected: int) -> None:
        """floor(log2(x)) is exact at and around powers of two."""
        assert floor_log2(value) == expected

    def test_floor_log2_rejects_non_positive(self) -> None:
        """Zero has no logarithm."""
        with pytest.raises(ValueError):
            floor_log2(Fraction(0))


class TestKeysAndDicts:
    """Test key and dictionary helpers."""

    def test_create_cell_key_skips_none(self) -> None:
        """None parts are left out of the key."""
        assert create_cell_key("gamma3", 4, "n", 12, 7) == "gamma3:4:n:12:7"
        assert create_cell_key("gamma1", 4, "m-m1", 3, None) == "gamma1:4:m-m1:3"

    def test_filter_none_values(self) -> None:
        """Only None entries are dropped."""
        assert filter_none_values({"k": 4, "n": None, "resume": False}) == {
            "k": 4,
            "resume": False,
        }
