"""Exact verification and family classification of solution tuples."""

from .._base import FamilyTag, SolutionRecord
from .._core.exceptions import MismatchError, RangeError
from .._sequence import kfib_term
from .._utils import get_logger, is_power_of_two, validate_order, validate_solution_order

logger = get_logger(__name__)


def _is_family_i(k: int, c: int, n: int, m: int, n1: int, m1: int) -> bool:
    # (0, s, s-2, t, t-2) with 2 <= t < s <= k+1
    return c == 0 and m == n - 2 and m1 == n1 - 2 and 2 <= n1 < n <= k + 1


def _is_family_ii_a(k: int, c: int, n: int, m: int, n1: int, m1: int) -> bool:
    return (c, n, m, n1, m1) == ((1 << (k - 1)) - 1, k + 2, k - 1, k + 1, 0)


def ii_b_tuple(k: int, a: int, b: int) -> tuple[int, int, int, int, int]:
    """(c, n, m, n1, m1) of family (ii-b) for the parameters (a, b)."""
    gap = (1 << a) - (1 << b)
    gamma = b - 3 + gap
    rho = a - 3 + gap
    c = (1 << gamma) - (1 << rho)
    return c, k + gap, k + gap - 2, gamma + 2, rho


def _is_family_ii_b(k: int, c: int, n: int, m: int, n1: int, m1: int) -> bool:
    gap = n - k
    b = n1 + 1 - gap
    a = m1 + 3 - gap
    if not (a > b >= 0 and (a, b) != (1, 0)):
        return False
    if (1 << a) - (1 << b) != gap or n1 + 1 > k + 2:
        return False
    return ii_b_tuple(k, a, b) == (c, n, m, n1, m1)


def iii_tuple(k: int, t: int) -> tuple[int, int, int, int, int]:
    """(c, n, m, n1, m1) of the operative form of family (iii) for t >= 2."""
    power = 1 << t
    c = (1 << (k + power - 4)) + (1 << (power - 4)) - (1 << (t + power - 4))
    return c, k + power - 1, k + power - 4, k + power - 2, t + power - 5


def _is_family_iii(k: int, c: int, n: int, m: int, n1: int, m1: int) -> bool:
    power = n - k + 1
    if not (power >= 4 and is_power_of_two(power) and power <= k + 3):
        return False
    t = power.bit_length() - 1
    return iii_tuple(k, t) == (c, n, m, n1, m1)


def iv_tuple(t: int) -> tuple[int, int, int, int, int]:
    """(c, n, m, n1, m1) of family (iv), which exists only for k = 2^t - 3."""
    m1 = t + (1 << t) - 3
    return 1 - (1 << m1), (1 << (t + 1)) - 3, (1 << (t + 1)) - 5, 2, m1


def _is_family_iv(k: int, c: int, n: int, m: int, n1: int, m1: int) -> bool:
    if not is_power_of_two(k + 3):
        return False
    t = (k + 3).bit_length() - 1
    return t >= 3 and iv_tuple(t) == (c, n, m, n1, m1)


_MATCHERS = (
    (FamilyTag.I, _is_family_i),
    (FamilyTag.II_A, _is_family_ii_a),
    (FamilyTag.II_B, _is_family_ii_b),
    (FamilyTag.III, _is_family_iii),
    (FamilyTag.IV, _is_family_iv),
)


def classify_tuple(k: int, c: int, n: int, m: int, n1: int, m1: int) -> FamilyTag:
    """Family of a tuple, or SPORADIC when no parametrization matches."""
    for tag, matches in _MATCHERS:
        if matches(k, c, n, m, n1, m1):
            return tag
    return FamilyTag.SPORADIC


def classify(record: SolutionRecord) -> FamilyTag:
    """Family of a verified record."""
    return classify_tuple(record.k, record.c, record.n, record.m, record.n1, record.m1)


def verify_solution(k: int, n: int, m: int, n1: int, m1: int) -> SolutionRecord:
    """
    Exact check of F_n - 2^m = F_n1 - 2^m1.

    Returns:
        The classified record

    Raises:
        RangeError: If n > n1 >= 2 or m > m1 >= 0 is violated
        MismatchError: If the two sides differ
    """
    validate_order(k, operation="verify_solution")
    violation = validate_solution_order(k, n, m, n1, m1)
    if violation is not None:
        raise RangeError(f"Tuple ordering violated: {violation}", k=k)
    lhs = kfib_term(k, n) - (1 << m)
    rhs = kfib_term(k, n1) - (1 << m1)
    if lhs != rhs:
        raise MismatchError(
            f"F_{n} - 2^{m} differs from F_{n1} - 2^{m1}", lhs=lhs, rhs=rhs, k=k
        )
    family = classify_tuple(k, lhs, n, m, n1, m1)
    return SolutionRecord(k=k, c=lhs, n=n, m=m, n1=n1, m1=m1, family=family)
