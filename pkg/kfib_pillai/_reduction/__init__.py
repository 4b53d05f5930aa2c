"""Continued fractions, the Dujella-Pethő reduction and the reduction sweeps."""

from .continued_fraction import (
    DEFAULT_MAX_QUOTIENTS,
    CFExpansion,
    cf_expand,
    convergents,
    distance_to_nearest_integer,
)
from .dujella_petho import (
    MAX_RETRIES,
    ReductionInstance,
    ReductionOutcome,
    dp_reduce,
    reduction_epsilon,
    w_bound_for,
)
from .pipeline import (
    DISPATCH_THRESHOLD,
    PipelineResult,
    ReductionBound,
    final_n_bound_after_reduction,
    reduction_pipeline,
)
from .sweep import (
    BRANCH_M_GAP,
    BRANCH_N,
    BRANCH_N_GAP,
    CASE_BRANCHES,
    Branch,
    CellSink,
    ProgressStore,
    QuotientStore,
    ReductionContext,
    SweepCell,
    SweepProgress,
    SweepResult,
    clear_reduction_cache,
    get_quotient_store,
    reduce_cell,
    reduction_context,
    reduction_sweep,
    set_quotient_store,
)

__all__ = [
    # Continued fractions
    "CFExpansion",
    "DEFAULT_MAX_QUOTIENTS",
    "cf_expand",
    "convergents",
    "distance_to_nearest_integer",
    # Reduction lemma
    "MAX_RETRIES",
    "ReductionInstance",
    "ReductionOutcome",
    "dp_reduce",
    "reduction_epsilon",
    "w_bound_for",
    # Sweeps
    "BRANCH_M_GAP",
    "BRANCH_N",
    "BRANCH_N_GAP",
    "Branch",
    "CASE_BRANCHES",
    "CellSink",
    "ProgressStore",
    "QuotientStore",
    "ReductionContext",
    "SweepCell",
    "SweepProgress",
    "SweepResult",
    "clear_reduction_cache",
    "get_quotient_store",
    "reduce_cell",
    "reduction_context",
    "reduction_sweep",
    "set_quotient_store",
    # Pipeline
    "DISPATCH_THRESHOLD",
    "PipelineResult",
    "ReductionBound",
    "final_n_bound_after_reduction",
    "reduction_pipeline",
]
