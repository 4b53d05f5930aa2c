"""Certified continued fractions of intervals and exact rationals."""

from collections.abc import Sequence
from fractions import Fraction
import math

from pydantic import BaseModel, Field

from .._algebraic import DyadicInterval
from .._core.exceptions import AmbiguousQuotientError, InvariantViolationError
from .._utils import get_logger

logger = get_logger(__name__)

DEFAULT_MAX_QUOTIENTS = 2000


class CFExpansion(BaseModel):
    """
    Certified prefix of the continued fraction of every point of ``x``.

    ``terminated`` is set when the input was an exact rational whose
    expansion ended. ``ambiguous_at`` is the first step whose integer part
    the interval could not decide, if the expansion stopped there.
    """

    x: DyadicInterval = Field(description="Enclosure that was expanded")
    quotients: list[int] = Field(default_factory=list, description="a_0, a_1, ...")
    convergents: list[tuple[int, int]] = Field(
        default_factory=list, description="(p_i, q_i) for every certified quotient"
    )
    terminated: bool = Field(default=False, description="Exact rational, fully expanded")
    ambiguous_at: int | None = Field(
        default=None, description="Step at which certification stopped"
    )

    model_config = {"frozen": True, "arbitrary_types_allowed": True}

    def first_index_above(self, bound: int) -> int | None:
        """Index of the first convergent with q > bound, if one was certified."""
        for index, (_, q) in enumerate(self.convergents):
            if q > bound:
                return index
        return None

    def check(self) -> None:
        """
        Verify the convergent recurrence, coprimality, growth of q and the
        approximation |x - p/q| < 1/q^2 against both endpoints of ``x``.

        Raises:
            InvariantViolationError: On the first property that fails
        """
        p_prev, p_prev2, q_prev, q_prev2 = 1, 0, 0, 1
        for index, (a, (p, q)) in enumerate(zip(self.quotients, self.convergents, strict=True)):
            if (p, q) != (a * p_prev + p_prev2, a * q_prev + q_prev2):
                self._fail("recurrence", index)
            if math.gcd(p, q) != 1:
                self._fail("coprime", index)
            if index >= 2 and q <= q_prev:
                self._fail("increasing q", index)
            bound = Fraction(1, q * q)
            approximation = Fraction(p, q)
            is_last = self.terminated and index == len(self.quotients) - 1
            if not is_last and not (
                abs(self.x.lo - approximation) < bound and abs(self.x.hi - approximation) < bound
            ):
                self._fail("|x - p/q| < 1/q^2", index)
            p_prev2, p_prev = p_prev, p
            q_prev2, q_prev = q_prev, q

    @staticmethod
    def _fail(invariant: str, index: int) -> None:
        raise InvariantViolationError(
            f"Convergent {index} violates {invariant}",
            invariant=invariant,
            operation="cf_expand",
        )


def convergents(quotients: Sequence[int]) -> list[tuple[int, int]]:
    """Convergents p_i / q_i of a list of partial quotients."""
    result: list[tuple[int, int]] = []
    p_prev, p_prev2, q_prev, q_prev2 = 1, 0, 0, 1
    for a in quotients:
        p, q = a * p_prev + p_prev2, a * q_prev + q_prev2
        result.append((p, q))
        p_prev2, p_prev = p_prev, p
        q_prev2, q_prev = q_prev, q
    return result


class _StopRule:
    """Stops the expansion ``extra`` quotients after the first q above ``q_limit``."""

    def __init__(self, q_limit: int | None, extra: int) -> None:
        self.q_limit = q_limit
        self.extra = extra
        self.q_prev, self.q_prev2 = 0, 1
        self.remaining: int | None = None

    def push(self, a: int) -> bool:
        """Record the next quotient; True when the expansion should stop after it."""
        self.q_prev2, self.q_prev = self.q_prev, a * self.q_prev + self.q_prev2
        if self.remaining is not None:
            self.remaining -= 1
            return self.remaining <= 0
        if self.q_limit is not None and self.q_prev > self.q_limit:
            self.remaining = self.extra
            return self.extra == 0
        return False


def _previous(table: list[tuple[int, int]], length: int) -> tuple[int, int]:
    return table[length - 2] if length >= 2 else (1, 0)


def _cylinder(table: list[tuple[int, int]], length: int) -> tuple[Fraction, Fraction]:
    # open set of points [a_0; ..., a_(length-1), t] with t > 1
    p, q = table[length - 1]
    p_prev, q_prev = _previous(table, length)
    ends = Fraction(p, q), Fraction(p + p_prev, q + q_prev)
    return min(ends), max(ends)


def _certified_prefix(lo: Fraction, hi: Fraction, prefix: Sequence[int]) -> int:
    """
    Length of the longest part of ``prefix`` shared by every point of [lo, hi].

    Cylinders shrink as the prefix grows, so the length is found by bisection.

    Raises:
        InvariantViolationError: If the first quotient past that length
            excludes the whole interval, or a quotient after a_0 is below 1
    """
    if any(a < 1 for a in prefix[1:]):
        raise InvariantViolationError(
            "Partial quotients after a_0 must be positive",
            invariant="known quotients",
            operation="cf_expand",
        )
    table = convergents(prefix)
    low, high = 0, len(prefix)
    while low < high:
        middle = (low + high + 1) // 2
        left, right = _cylinder(table, middle)
        if left < lo and hi < right:
            low = middle
        else:
            high = middle - 1
    if low < len(prefix):
        left, right = _cylinder(table, low + 1)
        if hi <= left or lo >= right:
            raise InvariantViolationError(
                f"Known quotient a_{low} = {prefix[low]} excludes the interval",
                invariant="known quotients",
                details=f"[{float(lo)}, {float(hi)}]",
                operation="cf_expand",
            )
    return low


def cf_expand(
    x: DyadicInterval | Fraction,
    max_quotients: int = DEFAULT_MAX_QUOTIENTS,
    q_limit: int | None = None,
    extra: int = 0,
    known: Sequence[int] | None = None,
) -> CFExpansion:
    """
    Expand both endpoints in lockstep, keeping quotients they agree on.

    An exact Fraction is expanded exactly and terminates. For an interval
    the expansion stops at the first step whose integer part differs across
    the interval.

    ``known`` quotients, typically read back from a cache, are taken over
    without re-expansion as far as the interval lies inside their cylinder;
    the expansion then continues from the complete quotient at that depth.
    Whatever is expanded afresh must agree with ``known`` where both exist.

    Args:
        x: Positive enclosure, or an exact rational
        max_quotients: Hard cap on the number of quotients
        q_limit: Stop ``extra`` quotients after the first q exceeding this
        extra: Quotients kept beyond the first one past ``q_limit``
        known: Previously computed quotients of the same number

    Raises:
        AmbiguousQuotientError: If not even a_0 can be certified
        InvariantViolationError: If ``known`` contradicts the interval
    """
    if isinstance(x, Fraction):
        lo = hi = x
        enclosure = DyadicInterval.exact(x)
    else:
        lo, hi = x.lo, x.hi
        enclosure = x

    rule = _StopRule(q_limit, extra)
    quotients: list[int] = []
    terminated = False
    ambiguous_at: int | None = None
    stopped = False

    if known and lo < hi:
        for a in known[: min(_certified_prefix(lo, hi, known), max_quotients)]:
            quotients.append(a)
            if rule.push(a):
                stopped = True
                break
        if quotients and not stopped:
            table = convergents(quotients)
            p, q = table[-1]
            p_prev, q_prev = _previous(table, len(table))

            def complete_quotient(point: Fraction) -> Fraction:
                return (p_prev - q_prev * point) / (q * point - p)

            ends = complete_quotient(lo), complete_quotient(hi)
            lo, hi = min(ends), max(ends)
        logger.debug("Continued fraction seeded", known=len(known), reused=len(quotients))

    while not stopped and len(quotients) < max_quotients:
        step = len(quotients)
        a = math.floor(lo)
        if a != math.floor(hi):
            ambiguous_at = step
            break
        quotients.append(a)
        if rule.push(a):
            break

        low_rest, high_rest = lo - a, hi - a
        if low_rest == high_rest == 0:
            terminated = True
            break
        if low_rest == 0:
            # the next quotient is unbounded for points near lo
            ambiguous_at = step + 1
            break
        # 1/(x - a) reverses the order of the endpoints
        lo, hi = 1 / high_rest, 1 / low_rest

    if not quotients:
        raise AmbiguousQuotientError(
            "Cannot certify the integer part of the interval",
            step=0,
            precision_bits=enclosure.precision,
            details=repr(enclosure),
        )
    if known:
        shared = min(len(known), len(quotients))
        if list(known[:shared]) != quotients[:shared]:
            mismatch = next(i for i in range(shared) if known[i] != quotients[i])
            raise InvariantViolationError(
                f"Known quotient a_{mismatch} = {known[mismatch]} disagrees with "
                f"the expansion ({quotients[mismatch]})",
                invariant="known quotients",
                operation="cf_expand",
            )
    logger.debug(
        "Continued fraction expanded",
        quotients=len(quotients),
        terminated=terminated,
        ambiguous_at=ambiguous_at,
    )
    return CFExpansion(
        x=enclosure,
        quotients=quotients,
        convergents=convergents(quotients),
        terminated=terminated,
        ambiguous_at=ambiguous_at,
    )


def distance_to_nearest_integer(x: DyadicInterval) -> DyadicInterval:
    """
    Enclosure of ||x||, the distance to the nearest integer.

    The distance is monotone between consecutive integers and half-integers,
    so away from those points the endpoint distances bound it.
    """
    half = Fraction(1, 2)

    def distance(value: Fraction) -> Fraction:
        return abs(value - math.floor(value + half))

    low_distance, high_distance = distance(x.lo), distance(x.hi)
    contains_integer = math.ceil(x.lo) <= x.hi
    contains_half = math.ceil(x.lo - half) <= x.hi - half
    low = Fraction(0) if contains_integer else min(low_distance, high_distance)
    high = half if contains_half else max(low_distance, high_distance)
    return DyadicInterval(low, high, x.precision)
