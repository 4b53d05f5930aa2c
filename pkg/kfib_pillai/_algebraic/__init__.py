"""Certified interval arithmetic for alpha(k), f_k(alpha) and logarithms."""

from .dyadic import (
    DEFAULT_PRECISION,
    DyadicInterval,
    from_mantissa_exponent,
    mantissa_exponent,
    round_dyadic,
)
from .logarithm import ln2_interval, log2_ratio, log_interval, sqrt_interval
from .precision import (
    REDUCTION_POLICY,
    SEQUENCE_POLICY,
    PrecisionPolicy,
    with_precision_ladder,
)
from .roots import (
    DominantRoot,
    RootStore,
    binet_residual,
    clear_root_cache,
    dominance_holds,
    dominant_root,
    f_k_of,
    f_k_value,
    get_root_store,
    psi_eval,
    psi_interval,
    set_root_store,
    working_precision,
)

__all__ = [
    "DEFAULT_PRECISION",
    "DominantRoot",
    "DyadicInterval",
    "PrecisionPolicy",
    "REDUCTION_POLICY",
    "RootStore",
    "SEQUENCE_POLICY",
    "binet_residual",
    "clear_root_cache",
    "dominance_holds",
    "dominant_root",
    "f_k_of",
    "f_k_value",
    "get_root_store",
    "from_mantissa_exponent",
    "ln2_interval",
    "log2_ratio",
    "log_interval",
    "mantissa_exponent",
    "psi_eval",
    "psi_interval",
    "set_root_store",
    "round_dyadic",
    "sqrt_interval",
    "with_precision_ladder",
    "working_precision",
]
