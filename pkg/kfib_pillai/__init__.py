"""
kfib-pillai

Certified computations around the equation F_n^(k) - 2^m = F_n1^(k) - 2^m1,
where F^(k) is the k-generalized Fibonacci sequence: integers c with at
least two representations as a difference of a k-Fibonacci number and a
power of two.

Key Features:
- Exact sequence arithmetic with the Cooper-Howard and two-term expansions
- Dyadic interval arithmetic for alpha(k), f_k(alpha) and logarithms, with
  directed rounding and a precision ladder
- The Matveev / Baker bound chain and the k cutoff
- Continued fractions and the Dujella-Pethő reduction over all four linear
  forms, resumable cell by cell
- Exact verification, family classification, and naive or residue-hashed
  exhaustive search
- A command-line front end with a persistent root cache

Example Usage:

    from kfib_pillai import SearchConfig, SearchMode, hash_search, kfib_term

    kfib_term(4, 13)  # 1490

    records = hash_search(SearchConfig(k_min=4, k_max=4, n_max=10, mode=SearchMode.HASH))
    sorted({record.c for record in records if record.c})  # [-8, -3, -1, 7, 13]
"""

# Certified algebraic quantities
from ._algebraic import (
    DominantRoot,
    DyadicInterval,
    PrecisionPolicy,
    RootStore,
    binet_residual,
    dominance_holds,
    dominant_root,
    f_k_value,
    ln2_interval,
    log_interval,
    psi_eval,
    set_root_store,
)

# Base records and enumerations
from ._base import (
    CellStatus,
    FamilyForm,
    FamilyInstance,
    FamilyTag,
    OutputFormat,
    ReductionCase,
    SearchConfig,
    SearchMode,
    SolutionRecord,
)

# Baker bounds
from ._bounds import (
    BoundChain,
    BoundReport,
    LinearForm,
    MatveevInputs,
    baker_chain,
    bound_report,
    cutoff_k,
    final_n_bound,
    hyp_holds,
    hypothesis_cutoff_k,
    linear_form_inputs,
    matveev_lower_bound,
)

# Command line
from ._cli import RootCache, RunConfig, ToolkitContainer, cache_roundtrip, run_command

# Exceptions
from ._core import (
    AmbiguousQuotientError,
    CacheError,
    ConfigurationError,
    DomainError,
    InvariantViolationError,
    KFibError,
    MismatchError,
    NoPositiveEpsilonError,
    PrecisionError,
    PrecisionExhaustedError,
    RangeError,
    ReductionError,
    VerificationError,
)

# Hook system
from ._hooks import (
    EventHook,
    EventHookManager,
    clear_all_hooks,
    emit_event,
    get_hook_manager,
    register_hook,
    set_hooks_enabled,
    unregister_hook,
)

# Reduction
from ._reduction import (
    CFExpansion,
    PipelineResult,
    ReductionBound,
    ReductionInstance,
    ReductionOutcome,
    SweepCell,
    SweepResult,
    cf_expand,
    dp_reduce,
    final_n_bound_after_reduction,
    reduction_pipeline,
    reduction_sweep,
    set_quotient_store,
)

# Search
from ._search import (
    brute_force_search,
    classify,
    family_enumerate,
    hash_search,
    m_window,
    run_search,
    statement_form_audit,
    verify_solution,
)

# Exact sequences
from ._sequence import (
    GomezEstimate,
    KFibSequence,
    cooper_howard,
    cooper_two_term,
    gap_is_increasing,
    get_sequence,
    gomez_estimate,
    kfib_term,
    kfib_three_term,
    power_of_two_indices,
)

# Testing utilities
from ._testing import EventCollector, clear_computation_caches, reset_global_state

# Version information
__version__ = "0.1.0"

__all__ = [
    # Version
    "__version__",
    # Exact sequences
    "GomezEstimate",
    "KFibSequence",
    "cooper_howard",
    "cooper_two_term",
    "gap_is_increasing",
    "get_sequence",
    "gomez_estimate",
    "kfib_term",
    "kfib_three_term",
    "power_of_two_indices",
    # Certified algebraic quantities
    "DominantRoot",
    "DyadicInterval",
    "PrecisionPolicy",
    "RootStore",
    "binet_residual",
    "dominance_holds",
    "dominant_root",
    "f_k_value",
    "ln2_interval",
    "log_interval",
    "psi_eval",
    "set_root_store",
    # Base records and enumerations
    "CellStatus",
    "FamilyForm",
    "FamilyInstance",
    "FamilyTag",
    "OutputFormat",
    "ReductionCase",
    "SearchConfig",
    "SearchMode",
    "SolutionRecord",
    # Baker bounds
    "BoundChain",
    "BoundReport",
    "LinearForm",
    "MatveevInputs",
    "baker_chain",
    "bound_report",
    "cutoff_k",
    "final_n_bound",
    "hyp_holds",
    "hypothesis_cutoff_k",
    "linear_form_inputs",
    "matveev_lower_bound",
    # Command line
    "RootCache",
    "RunConfig",
    "ToolkitContainer",
    "cache_roundtrip",
    "run_command",
    # Exceptions
    "AmbiguousQuotientError",
    "CacheError",
    "ConfigurationError",
    "DomainError",
    "InvariantViolationError",
    "KFibError",
    "MismatchError",
    "NoPositiveEpsilonError",
    "PrecisionError",
    "PrecisionExhaustedError",
    "RangeError",
    "ReductionError",
    "VerificationError",
    # Hook system
    "EventHook",
    "EventHookManager",
    "clear_all_hooks",
    "emit_event",
    "get_hook_manager",
    "register_hook",
    "set_hooks_enabled",
    "unregister_hook",
    # Reduction
    "CFExpansion",
    "PipelineResult",
    "ReductionBound",
    "ReductionInstance",
    "ReductionOutcome",
    "SweepCell",
    "SweepResult",
    "cf_expand",
    "dp_reduce",
    "final_n_bound_after_reduction",
    "reduction_pipeline",
    "reduction_sweep",
    "set_quotient_store",
    # Search
    "brute_force_search",
    "classify",
    "family_enumerate",
    "hash_search",
    "m_window",
    "run_search",
    "statement_form_audit",
    "verify_solution",
    # Testing utilities
    "EventCollector",
    "clear_computation_caches",
    "reset_global_state",
]
