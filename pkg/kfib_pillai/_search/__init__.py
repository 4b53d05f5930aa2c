"""Verification, classification, family generation and exhaustive search."""

from .classify import (
    classify,
    classify_tuple,
    ii_b_tuple,
    iii_tuple,
    iv_tuple,
    verify_solution,
)
from .families import family_enumerate, statement_form_audit
from .search import (
    brute_force_search,
    clear_slope_cache,
    hash_search,
    m_window,
    run_search,
)

__all__ = [
    # Verification
    "classify",
    "classify_tuple",
    "ii_b_tuple",
    "iii_tuple",
    "iv_tuple",
    "verify_solution",
    # Families
    "family_enumerate",
    "statement_form_audit",
    # Search
    "brute_force_search",
    "clear_slope_cache",
    "hash_search",
    "m_window",
    "run_search",
]
