"""Exhaustive searches for F_n - F_n1 = 2^m - 2^m1 over a finite box."""

from bisect import bisect_left
from functools import lru_cache

from .._algebraic import DyadicInterval, dominant_root, log2_ratio
from .._base import SearchConfig, SearchMode, SolutionRecord
from .._core.exceptions import InvariantViolationError
from .._hooks import EventHook, emit_event
from .._sequence import get_sequence
from .._utils import get_logger, is_power_of_two, log_solution_found, nearest_int
from .classify import verify_solution

logger = get_logger(__name__)

SLOPE_PRECISION = 128


@lru_cache(maxsize=1024)
def _slope(k: int) -> DyadicInterval:
    # log alpha / log 2
    return log2_ratio(dominant_root(k, SLOPE_PRECISION).alpha)


def m_window(k: int, n: int) -> tuple[int, int]:
    """
    Range of m that can occur with a given n, both ends inclusive.

    2^m exceeds F_(n-2) >= alpha^(n-4) and 2^(m-1) is below F_n <= alpha^(n-1),
    so m lies in [round(tau (n-4)), round(tau (n-1) + 1)] with tau = log alpha / log 2.
    The window is widened by one on each side and then clipped to
    [1, n - 2], since 2^(m-1) <= 2^m - 2^m1 < F_n <= 2^(n-2).
    """
    tau = _slope(k)
    low = nearest_int((tau * (n - 4)).lo) - 1
    high = nearest_int((tau * (n - 1) + 1).hi) + 1
    return max(low, 1), min(high, n - 2)


def _check_invariants(record: SolutionRecord) -> None:
    k, n, m, n1 = record.k, record.n, record.m, record.n1
    if record.c == 0 and n > k + 1:
        raise InvariantViolationError(
            "Zero c outside n <= k + 1",
            invariant="zero c only for n <= k + 1",
            details=repr(record.key),
            k=k,
            operation="search",
        )
    if 2 <= n1 <= k + 1 and k + 2 <= n <= 2 * k + 2 and m not in (n - 3, n - 2):
        raise InvariantViolationError(
            "m is neither n - 3 nor n - 2",
            invariant="m in {n-3, n-2} when n1 <= k+1 < n <= 2k+2",
            details=repr(record.key),
            k=k,
            operation="search",
        )


def _found(record: SolutionRecord, check: bool, mode: SearchMode) -> SolutionRecord:
    if check:
        _check_invariants(record)
    log_solution_found(
        record.k, record.c, record.n, record.m, record.n1, record.m1, record.family.value,
        mode=mode.value,
    )
    emit_event(EventHook.SOLUTION_FOUND, {"record": record.to_row(), "mode": mode.value})
    return record


def _naive_order(k: int, n_max: int, check: bool) -> list[SolutionRecord]:
    terms = get_sequence(k).terms(0, n_max)
    records: list[SolutionRecord] = []
    for n in range(3, n_max + 1):
        m_low, m_high = m_window(k, n)
        for m in range(m_low, m_high + 1):
            c = terms[n] - (1 << m)
            for n1 in range(2, n):
                power = terms[n1] - c
                if not is_power_of_two(power):
                    continue
                m1 = power.bit_length() - 1
                if m1 < m:
                    record = verify_solution(k, n, m, n1, m1)
                    records.append(_found(record, check, SearchMode.NAIVE))
    return records


def brute_force_search(cfg: SearchConfig) -> list[SolutionRecord]:
    """
    Exact triple loop over n, m in its window, and n1; m1 is read off.

    Returns:
        Every solution in the box, classified, ordered by (k, n, m, n1, m1)
    """
    records: list[SolutionRecord] = []
    for k in cfg.orders():
        found = _naive_order(k, cfg.n_max, cfg.check_invariants)
        logger.debug("Naive search finished", k=k, n_max=cfg.n_max, solutions=len(found))
        records.extend(found)
    records.sort(key=lambda record: record.key)
    return records


class _ResidueTable:
    """Sorted residues of 2^m - 2^m1 with the (m, m1) pair behind each."""

    def __init__(self, m_max: int, modulus: int) -> None:
        entries = sorted(
            (((1 << m) - (1 << m1)) % modulus, m, m1)
            for m in range(1, m_max + 1)
            for m1 in range(m)
        )
        self.residues = [entry[0] for entry in entries]
        self.pairs = [(entry[1], entry[2]) for entry in entries]

    def lookup(self, residue: int) -> list[tuple[int, int]]:
        index = bisect_left(self.residues, residue)
        matches: list[tuple[int, int]] = []
        while index < len(self.residues) and self.residues[index] == residue:
            matches.append(self.pairs[index])
            index += 1
        return matches


def _hash_order(k: int, n_max: int, modulus: int, check: bool) -> list[SolutionRecord]:
    terms = get_sequence(k).terms(0, n_max)
    m_max = max(m_window(k, n)[1] for n in range(3, n_max + 1))
    table = _ResidueTable(m_max, modulus)
    records: list[SolutionRecord] = []
    candidates = 0
    for n in range(3, n_max + 1):
        m_low, m_high = m_window(k, n)
        for n1 in range(2, n):
            difference = terms[n] - terms[n1]
            for m, m1 in table.lookup(difference % modulus):
                if not m_low <= m <= m_high:
                    continue
                candidates += 1
                # residues can collide; only exact equality counts
                if difference == (1 << m) - (1 << m1):
                    records.append(_found(verify_solution(k, n, m, n1, m1), check, SearchMode.HASH))
    logger.debug(
        "Hash search finished",
        k=k,
        n_max=n_max,
        modulus=str(modulus),
        candidates=candidates,
        solutions=len(records),
    )
    return records


def hash_search(cfg: SearchConfig) -> list[SolutionRecord]:
    """
    Intersect residues of F_n - F_n1 with residues of 2^m - 2^m1 modulo
    ``cfg.modulus`` and keep the collisions that hold exactly.

    The result does not depend on the modulus.
    """
    records: list[SolutionRecord] = []
    for k in cfg.orders():
        records.extend(_hash_order(k, cfg.n_max, cfg.modulus, cfg.check_invariants))
    records.sort(key=lambda record: record.key)
    return records


def run_search(cfg: SearchConfig) -> list[SolutionRecord]:
    """Dispatch on ``cfg.mode``."""
    if cfg.mode is SearchMode.HASH:
        return hash_search(cfg)
    return brute_force_search(cfg)


def clear_slope_cache() -> None:
    """Forget cached slopes."""
    _slope.cache_clear()
