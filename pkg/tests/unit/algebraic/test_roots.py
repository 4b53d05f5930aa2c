"""Tests for alpha(k), f_k(alpha) and the Binet-like residual."""

from fractions import Fraction
from pathlib import Path
import random

import pytest

from kfib_pillai import (
    DomainError,
    DyadicInterval,
    EventCollector,
    EventHook,
    RootCache,
    binet_residual,
    clear_computation_caches,
    dominance_holds,
    dominant_root,
    f_k_value,
    psi_eval,
    set_root_store,
)
from kfib_pillai._algebraic import f_k_of, psi_interval, working_precision


class TestPsi:
    """Test the characteristic polynomial."""

    def test_exact_values(self) -> None:
        """Psi_4(1) = -3 and Psi_4(2) = 1."""
        assert psi_eval(4, 1) == -3
        assert psi_eval(4, 2) == 1
        assert psi_eval(2, Fraction(3, 2)) == Fraction(-1, 4)

    def test_interval_matches_exact(self) -> None:
        """Interval Horner encloses the exact value."""
        root = dominant_root(5, 64)
        value = psi_interval(5, root.alpha)
        assert value.contains(0)

    @pytest.mark.parametrize("precision", [32, 64, 256])
    def test_random_points_enclosed(self, precision: int) -> None:
        """The interval value at an enclosure of x contains Psi_k(x)."""
        rng = random.Random(precision)
        for _ in range(200):
            k = rng.randint(2, 40)
            x = Fraction(rng.randrange(-3 * 10**6, 3 * 10**6), rng.randrange(1, 10**6))
            enclosure = DyadicInterval.exact(x, precision)
            assert enclosure.contains(x)
            assert psi_interval(k, enclosure).contains(psi_eval(k, x))

    def test_wide_interval_encloses_inner_points(self) -> None:
        """Every point of a wide argument maps into the value interval."""
        rng = random.Random(7)
        for _ in range(50):
            k = rng.randint(2, 12)
            low = Fraction(rng.randrange(-2000, 2000), 1000)
            value = psi_interval(k, DyadicInterval(low, low + Fraction(1, 100), 64))
            for step in range(11):
                assert value.contains(psi_eval(k, low + Fraction(step, 1000)))


class TestDominantRoot:
    """Test the certified root enclosure."""

    def test_tetranacci_constant(self) -> None:
        """alpha(4) = 1.9275619755..."""
        root = dominant_root(4, 128)
        assert abs(float(root.alpha) - 1.9275619755) < 1e-10
        assert root.alpha.width < Fraction(1, 2**128)

    def test_golden_ratio(self) -> None:
        """alpha(2) is the golden ratio."""
        assert abs(float(dominant_root(2, 64).alpha) - 1.6180339887498949) < 1e-15

    def test_sign_change(self) -> None:
        """Psi_k is negative at lo and positive at hi."""
        for k in (3, 7, 20):
            alpha = dominant_root(k, 96).alpha
            assert psi_eval(k, alpha.lo) < 0 < psi_eval(k, alpha.hi)

    def test_bracket(self) -> None:
        """2 (1 - 2^-k) < alpha(k) < 2."""
        for k in (2, 5, 40):
            alpha = dominant_root(k, 64).alpha
            assert 2 * (1 - Fraction(1, 2**k)) < alpha.lo
            assert alpha.hi < 2

    @pytest.mark.parametrize("k", [2, 4, 17, 60])
    def test_nested_across_doublings(self, k: int) -> None:
        """Doubling the precision gives a sub-interval of the previous enclosure."""
        previous = dominant_root(k, 32).alpha
        for bits in (64, 128, 256, 512, 1024):
            current = dominant_root(k, bits).alpha
            assert current.is_nested_in(previous)
            assert current.width < previous.width
            previous = current

    def test_order_validated(self) -> None:
        """k = 1 has no dominant root here."""
        with pytest.raises(DomainError):
            dominant_root(1)

    def test_precision_validated(self) -> None:
        """At least 16 bits are required."""
        with pytest.raises(DomainError):
            dominant_root(4, 8)


class TestRootStore:
    """Test the persistent store consulted before bisection."""

    def test_explicit_store_hit(self, root_cache: RootCache) -> None:
        """A stored root is returned without bisecting again."""
        computed = dominant_root(6, 256, store=root_cache)
        assert len(root_cache) == 1
        collector = EventCollector().subscribe(EventHook.ROOT_CACHE_HIT, EventHook.ROOT_COMPUTED)
        clear_computation_caches()

        assert dominant_root(6, 256, store=root_cache) == computed
        assert len(collector.get_events_by_type(EventHook.ROOT_CACHE_HIT)) == 1
        assert collector.get_events_by_type(EventHook.ROOT_COMPUTED) == []

    def test_lower_request_served_by_higher_entry(self, root_cache: RootCache) -> None:
        """A 128-bit request is served by a stored 256-bit root."""
        stored = dominant_root(7, 256, store=root_cache)
        assert dominant_root(7, 128, store=root_cache) is stored

    def test_default_store(self, cache_path: Path) -> None:
        """set_root_store makes every lookup consult the store."""
        cache = RootCache(cache_path)
        set_root_store(cache)
        f_k_value(5, 128)
        assert cache.get_root(5, 128) is not None

    def test_bisection_events(self, event_collector: EventCollector) -> None:
        """A fresh bisection emits ROOT_COMPUTED."""
        event_collector.subscribe(EventHook.ROOT_COMPUTED)
        clear_computation_caches()
        dominant_root(9, 64)
        event_collector.assert_has_event(k=9, precision_bits=64)


class TestFkValue:
    """Test f_k(alpha)."""

    def test_tetranacci_value(self) -> None:
        """f_4(alpha) = 0.5663428877..."""
        assert abs(float(f_k_value(4)) - 0.5663428877) < 1e-10

    @pytest.mark.parametrize("k", [2, 3, 10, 100])
    def test_between_half_and_three_quarters(self, k: int) -> None:
        """1/2 < f_k(alpha) < 3/4 for every k."""
        value = f_k_value(k)
        assert value.certainly_gt(Fraction(1, 2))
        assert value.certainly_lt(Fraction(3, 4))

    @pytest.mark.slow
    def test_between_half_and_three_quarters_up_to_cutoff(self) -> None:
        """1/2 < f_k(alpha) < 3/4 for every k from 4 to 790."""
        for k in range(4, 791):
            value = f_k_value(k)
            assert value.certainly_gt(Fraction(1, 2)), k
            assert value.certainly_lt(Fraction(3, 4)), k

    def test_f_k_of_exact_point(self) -> None:
        """f_k(2) = 1/2 whatever k is."""
        assert f_k_of(7, DyadicInterval.exact(2)) == DyadicInterval(Fraction(1, 2), Fraction(1, 2))


class TestBinetResidual:
    """Test |F_n - f_k(alpha) alpha^(n-1)| < 1/2."""

    def test_tetranacci_value(self) -> None:
        """The residual at (4, 13) is about 0.02268."""
        assert abs(float(binet_residual(4, 13)) - 0.02268) < 1e-4

    @pytest.mark.parametrize("k", [2, 3, 5, 12])
    def test_certified_for_range(self, k: int) -> None:
        """The residual is certified below 1/2 across many n."""
        for n in range(2 - k, 90):
            residual = binet_residual(k, n)
            assert residual.certainly_lt(Fraction(1, 2))
            assert residual.certainly_gt(Fraction(-1, 2))

    def test_large_n_raises_precision(self) -> None:
        """Large n get a working precision above the request."""
        assert working_precision(256, 1000) > 1000
        assert working_precision(256, 10) == 256
        assert binet_residual(3, 1000).certainly_lt(Fraction(1, 2))


class TestDominance:
    """Test alpha^(n-2) <= F_n <= alpha^(n-1)."""

    @pytest.mark.parametrize("k", [2, 4, 9])
    def test_holds(self, k: int) -> None:
        """The sandwich holds for every n >= 1."""
        assert all(dominance_holds(k, n) for n in range(1, 150))

    def test_index_validated(self) -> None:
        """n = 0 is outside the asserted range."""
        with pytest.raises(DomainError):
            dominance_holds(4, 0)
