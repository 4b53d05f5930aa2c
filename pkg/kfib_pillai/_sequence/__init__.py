"""Exact k-generalized Fibonacci arithmetic and its power-of-two expansions."""

from .expansions import (
    GomezEstimate,
    cooper_howard,
    cooper_howard_coefficient,
    cooper_two_term,
    gomez_estimate,
    gomez_f,
)
from .kfib import (
    KFibSequence,
    clear_sequence_cache,
    gap_is_increasing,
    get_sequence,
    kfib_term,
    kfib_three_term,
    power_of_two_indices,
)

__all__ = [
    "GomezEstimate",
    "KFibSequence",
    "clear_sequence_cache",
    "cooper_howard",
    "cooper_howard_coefficient",
    "cooper_two_term",
    "gap_is_increasing",
    "get_sequence",
    "gomez_estimate",
    "gomez_f",
    "kfib_term",
    "kfib_three_term",
    "power_of_two_indices",
]
