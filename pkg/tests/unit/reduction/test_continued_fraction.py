"""Tests for certified continued fractions."""

from fractions import Fraction

import pytest

from kfib_pillai import (
    AmbiguousQuotientError,
    CFExpansion,
    DyadicInterval,
    InvariantViolationError,
    cf_expand,
    dominant_root,
)
from kfib_pillai._algebraic import log2_ratio
from kfib_pillai._reduction import convergents, distance_to_nearest_integer


class TestCfExpand:
    """Test expansions of rationals and intervals."""

    def test_exact_rational_terminates(self) -> None:
        """415/93 = [4; 2, 6, 7]."""
        expansion = cf_expand(Fraction(415, 93))
        assert expansion.quotients == [4, 2, 6, 7]
        assert expansion.convergents[-1] == (415, 93)
        assert expansion.terminated
        expansion.check()

    def test_log2_golden_ratio(self) -> None:
        """log_2 of the golden ratio starts [0; 1, 2, 3, 1, ...]."""
        tau = log2_ratio(dominant_root(2, 256).alpha)
        expansion = cf_expand(tau)
        assert expansion.quotients[:5] == [0, 1, 2, 3, 1]
        assert not expansion.terminated
        assert expansion.ambiguous_at == len(expansion.quotients)
        expansion.check()

    def test_precision_bounds_the_prefix(self) -> None:
        """A wider enclosure certifies fewer quotients."""
        alpha = dominant_root(4, 512).alpha
        narrow = cf_expand(log2_ratio(alpha, 512))
        wide = cf_expand(log2_ratio(alpha.with_precision(64), 64))
        assert len(wide.quotients) < len(narrow.quotients)
        assert narrow.quotients[: len(wide.quotients)] == wide.quotients

    def test_q_limit_with_extra(self) -> None:
        """Expansion stops extra quotients after the first q above the limit."""
        tau = log2_ratio(dominant_root(3, 512).alpha)
        expansion = cf_expand(tau, q_limit=1000, extra=3)
        first = expansion.first_index_above(1000)
        assert first is not None
        assert len(expansion.quotients) == first + 4

    def test_max_quotients(self) -> None:
        """The hard cap is honored."""
        tau = log2_ratio(dominant_root(3, 512).alpha)
        assert len(cf_expand(tau, max_quotients=7).quotients) == 7

    def test_undecidable_integer_part(self) -> None:
        """An interval across an integer has no certified a_0."""
        with pytest.raises(AmbiguousQuotientError) as exc_info:
            cf_expand(DyadicInterval(Fraction(5, 2), Fraction(7, 2)))
        assert exc_info.value.step == 0


class TestConvergents:
    """Test convergent bookkeeping."""

    def test_recurrence(self) -> None:
        """[0; 1, 2, 3] has convergents 0/1, 1/1, 2/3, 7/10."""
        assert convergents([0, 1, 2, 3]) == [(0, 1), (1, 1), (2, 3), (7, 10)]

    def test_first_index_above(self) -> None:
        """The first q strictly above the bound is located."""
        expansion = cf_expand(Fraction(415, 93))
        assert expansion.first_index_above(10) == 2
        assert expansion.first_index_above(93) is None

    def test_check_detects_tampering(self) -> None:
        """Altered convergents fail the recurrence check."""
        expansion = cf_expand(Fraction(415, 93))
        tampered = CFExpansion(
            x=expansion.x,
            quotients=expansion.quotients,
            convergents=[(4, 1), (9, 2), (58, 13), (414, 93)],
            terminated=True,
        )
        with pytest.raises(InvariantViolationError) as exc_info:
            tampered.check()
        assert exc_info.value.invariant == "recurrence"


class TestDistanceToNearestInteger:
    """Test ||x|| on intervals."""

    def test_between_integer_and_half(self) -> None:
        """Away from integers and half-integers the endpoints bound it."""
        distance = distance_to_nearest_integer(DyadicInterval(Fraction(21, 10), Fraction(23, 10)))
        assert distance.contains(Fraction(1, 10))
        assert distance.contains(Fraction(3, 10))
        assert distance.certainly_lt(Fraction(1, 2))

    def test_across_integer(self) -> None:
        """An interval containing an integer reaches 0."""
        distance = distance_to_nearest_integer(DyadicInterval(Fraction(9, 10), Fraction(11, 10)))
        assert distance.lo == 0

    def test_across_half(self) -> None:
        """An interval containing a half-integer reaches 1/2."""
        distance = distance_to_nearest_integer(DyadicInterval(Fraction(2, 5), Fraction(3, 5)))
        assert distance.hi == Fraction(1, 2)
        assert distance.lo <= Fraction(2, 5)


class TestKnownQuotients:
    """Test seeding an expansion with previously computed quotients."""

    def test_same_enclosure(self) -> None:
        """Seeding with the full expansion reproduces it."""
        tau = log2_ratio(dominant_root(4, 512).alpha, 512)
        fresh = cf_expand(tau)
        assert cf_expand(tau, known=fresh.quotients) == fresh

    def test_longer_prefix_is_cut_to_what_the_interval_certifies(self) -> None:
        """Quotients from a narrower enclosure are only reused where certified."""
        alpha = dominant_root(4, 512).alpha
        narrow = cf_expand(log2_ratio(alpha, 512))
        wide_tau = log2_ratio(alpha.with_precision(64), 64)
        seeded = cf_expand(wide_tau, known=narrow.quotients)
        assert seeded.quotients == cf_expand(wide_tau).quotients
        seeded.check()

    def test_shorter_prefix_is_extended(self) -> None:
        """The expansion continues past the known quotients."""
        tau = log2_ratio(dominant_root(5, 512).alpha, 512)
        fresh = cf_expand(tau)
        seeded = cf_expand(tau, known=fresh.quotients[:10])
        assert seeded.quotients == fresh.quotients

    def test_stop_rule_applies_inside_prefix(self) -> None:
        """q_limit and extra cut a long known prefix exactly as a fresh expansion."""
        tau = log2_ratio(dominant_root(3, 512).alpha, 512)
        known = cf_expand(tau).quotients
        assert cf_expand(tau, q_limit=1000, extra=3, known=known) == cf_expand(
            tau, q_limit=1000, extra=3
        )
        assert len(cf_expand(tau, max_quotients=5, known=known).quotients) == 5

    def test_contradicting_quotient(self) -> None:
        """A known quotient that excludes the interval is refused."""
        tau = log2_ratio(dominant_root(4, 512).alpha, 512)
        known = cf_expand(tau).quotients
        known[3] += 1
        with pytest.raises(InvariantViolationError, match="excludes the interval") as info:
            cf_expand(tau, known=known)
        assert info.value.invariant == "known quotients"

    def test_non_positive_quotient(self) -> None:
        """Quotients after a_0 must be at least 1."""
        tau = log2_ratio(dominant_root(4, 256).alpha)
        with pytest.raises(InvariantViolationError, match="must be positive"):
            cf_expand(tau, known=[0, 1, 0, 4])

    def test_exact_rational_checked(self) -> None:
        """For an exact rational the known quotients are compared, not reused."""
        assert cf_expand(Fraction(415, 93), known=[4, 2]).quotients == [4, 2, 6, 7]
        with pytest.raises(InvariantViolationError, match="disagrees"):
            cf_expand(Fraction(415, 93), known=[4, 2, 5])
