"""Tests for the power-of-two expansions of F_n^(k)."""

from fractions import Fraction

import pytest

from kfib_pillai import DomainError, cooper_howard, cooper_two_term, gomez_estimate, kfib_term
from kfib_pillai._sequence.expansions import cooper_howard_coefficient


class TestCooperHoward:
    """Test the full binomial expansion."""

    @pytest.mark.parametrize("k", [2, 3, 4, 6, 11])
    def test_matches_recurrence(self, k: int) -> None:
        """The expansion is exact for every n >= k + 2."""
        for n in range(k + 2, k + 120):
            assert cooper_howard(k, n) == kfib_term(k, n)

    def test_first_coefficient(self) -> None:
        """C_(n,1) = -(n - k)."""
        assert cooper_howard_coefficient(4, 10, 1) == -6

    def test_below_range(self) -> None:
        """n < k + 2 is rejected."""
        with pytest.raises(DomainError):
            cooper_howard(4, 5)


class TestCooperTwoTerm:
    """Test the two-term form on its asserted range."""

    def test_known_values(self) -> None:
        """F_6 = 15 and F_10 = 208 for k = 4."""
        assert cooper_two_term(4, 6) == 15
        assert cooper_two_term(4, 10) == 208

    @pytest.mark.parametrize("k", [3, 5, 8])
    def test_whole_range(self, k: int) -> None:
        """Exact on k + 2 <= n <= 2k + 2."""
        for n in range(k + 2, 2 * k + 3):
            assert cooper_two_term(k, n) == kfib_term(k, n)

    def test_outside_range(self) -> None:
        """n = 2k + 3 is where the form stops being exact."""
        with pytest.raises(DomainError):
            cooper_two_term(4, 11)
        assert kfib_term(4, 11) != 2**9 - 7 * 2**4


class TestGomezEstimate:
    """Test the second-order estimate and its residual."""

    def test_exact_at_k6_n15(self) -> None:
        """The estimate is exact at (6, 15)."""
        estimate = gomez_estimate(6, 15)
        assert estimate.main_term == 7617
        assert estimate.zeta == 0
        assert estimate.bound_asserted
        assert estimate.within_bound

    def test_exact_at_k6_n20(self) -> None:
        """And at (6, 20)."""
        estimate = gomez_estimate(6, 20)
        assert estimate.main_term == 233904
        assert estimate.zeta == 0

    def test_spurious_correction_below_range(self) -> None:
        """Below 2k + 3 the residual is -f(k, n) / 2^(2k+2)."""
        estimate = gomez_estimate(10, 15)
        assert estimate.zeta == Fraction(-14, 2**22)
        assert not estimate.bound_asserted

    def test_reconstructs_term(self) -> None:
        """main_term + 2^(n-2) zeta is F_n exactly."""
        for n in range(11, 32):
            estimate = gomez_estimate(5, n)
            assert estimate.main_term + Fraction(2) ** (n - 2) * estimate.zeta == kfib_term(5, n)

    @pytest.mark.parametrize("k", [6, 8, 10])
    def test_bound_holds_where_asserted(self, k: int) -> None:
        """|zeta| < 4 n^3 / 2^(3k+3) for 2k + 3 <= n < 2^k."""
        for n in range(2 * k + 3, 5 * k):
            assert gomez_estimate(k, n).within_bound

    def test_n_too_large(self) -> None:
        """n must stay below 2^k."""
        with pytest.raises(DomainError):
            gomez_estimate(4, 16)
