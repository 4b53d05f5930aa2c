"""Exact k-generalized Fibonacci numbers with a shared per-k cache."""

from threading import RLock

from .._utils import get_logger, is_power_of_two, validate_index, validate_order

logger = get_logger(__name__)


class KFibSequence:
    """
    Growable prefix of the k-generalized Fibonacci sequence.

    Terms are indexed from n = 2 - k, with F_n = 0 for 2 - k <= n <= 0 and
    F_1 = 1. Extension keeps a running sum of the last k terms, so each new
    term costs two big-integer additions instead of a k-term sum.
    """

    def __init__(self, k: int) -> None:
        validate_order(k, operation="KFibSequence")
        self.k = k
        self._terms: list[int] = [0] * (k - 1) + [1]
        self._window = 1
        self._lock = RLock()

    @property
    def first_index(self) -> int:
        """Smallest index held by the sequence."""
        return 2 - self.k

    @property
    def last_index(self) -> int:
        """Largest index computed so far."""
        return len(self._terms) - self.k + 1

    def _extend_to(self, n: int) -> None:
        if n <= self.last_index:
            return
        with self._lock:
            terms = self._terms
            k = self.k
            while len(terms) - k + 1 < n:
                value = self._window
                terms.append(value)
                self._window += value - terms[-1 - k]
        logger.debug("Sequence extended", k=self.k, last_index=self.last_index)

    def term(self, n: int) -> int:
        """
        Return F_n exactly.

        Raises:
            DomainError: If n < 2 - k
        """
        validate_index(self.k, n, self.first_index, operation="kfib_term")
        self._extend_to(n)
        return self._terms[n + self.k - 2]

    def terms(self, n_start: int, n_end: int) -> list[int]:
        """Return [F_n_start, ..., F_n_end] inclusive."""
        validate_index(self.k, n_start, self.first_index, operation="kfib_terms")
        self._extend_to(n_end)
        offset = self.k - 2
        return self._terms[n_start + offset : n_end + offset + 1]

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        return f"KFibSequence(k={self.k}, last_index={self.last_index})"


_sequences: dict[int, KFibSequence] = {}
_registry_lock = RLock()


def get_sequence(k: int) -> KFibSequence:
    """Get the shared sequence cache for order k, creating it on first use."""
    sequence = _sequences.get(k)
    if sequence is not None:
        return sequence
    with _registry_lock:
        sequence = _sequences.get(k)
        if sequence is None:
            sequence = KFibSequence(k)
            _sequences[k] = sequence
        return sequence


def clear_sequence_cache() -> None:
    """Drop every cached sequence."""
    with _registry_lock:
        _sequences.clear()


def kfib_term(k: int, n: int) -> int:
    """
    Return the k-generalized Fibonacci number F_n^(k).

    Args:
        k: Recursion order, at least 2
        n: Index, at least 2 - k

    Raises:
        DomainError: If k < 2 or n < 2 - k
    """
    validate_order(k, operation="kfib_term")
    return get_sequence(k).term(n)


def kfib_three_term(k: int, n: int) -> int:
    """
    Return F_n^(k) through F_n = 2 F_(n-1) - F_(n-k-1).

    Runs its own iteration from the initial conditions, so agreement with
    kfib_term is a genuine cross-check.
    """
    validate_order(k, operation="kfib_three_term")
    validate_index(k, n, 3, operation="kfib_three_term")
    # window holds F_(2-k) .. F_2
    window = [0] * (k - 1) + [1, 1]
    for _ in range(3, n + 1):
        window.append(2 * window[-1] - window[-1 - k])
        del window[0]
    return window[-1]


def gap_is_increasing(k: int, n: int) -> bool:
    """Exact check of 2^(n-1) - F_(n+1) > 2^(n-2) - F_n, asserted for n >= k + 3."""
    validate_order(k, operation="gap_is_increasing")
    validate_index(k, n, k + 3, operation="gap_is_increasing")
    sequence = get_sequence(k)
    return (1 << (n - 1)) - sequence.term(n + 1) > (1 << (n - 2)) - sequence.term(n)


def power_of_two_indices(k: int, n_max: int) -> list[int]:
    """Indices 1 <= s <= n_max for which F_s is a power of two."""
    validate_order(k, operation="power_of_two_indices")
    sequence = get_sequence(k)
    return [s for s in range(1, n_max + 1) if is_power_of_two(sequence.term(s))]
