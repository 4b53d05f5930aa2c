"""Baker-method bounds: Matveev's theorem, heights, the bound chain and cutoffs."""

from .chain import (
    BOUND_POLICY,
    CLOSURE_CONSTANT,
    DEFAULT_N_HYPOTHESIS,
    FINAL_CONSTANT,
    MAX_BOUND_CONSTANT,
    MIN_BOUND_CONSTANT,
    MIN_BOUND_CONSTANT_UNROUNDED,
    BoundChain,
    baker_chain,
    final_n_bound,
)
from .cutoff import (
    BoundReport,
    bound_report,
    cutoff_k,
    hyp_holds,
    hypothesis_cutoff_k,
    printed_cutoff_holds,
)
from .heights import (
    LinearForm,
    f_k_height_bound,
    height_power,
    height_product,
    height_sum,
    linear_form_inputs,
    rational_height,
)
from .matveev import MatveevInputs, matveev_lower_bound, matveev_magnitude

__all__ = [
    # Matveev
    "MatveevInputs",
    "matveev_lower_bound",
    "matveev_magnitude",
    # Heights
    "LinearForm",
    "f_k_height_bound",
    "height_power",
    "height_product",
    "height_sum",
    "linear_form_inputs",
    "rational_height",
    # Chain
    "BOUND_POLICY",
    "BoundChain",
    "CLOSURE_CONSTANT",
    "DEFAULT_N_HYPOTHESIS",
    "FINAL_CONSTANT",
    "MAX_BOUND_CONSTANT",
    "MIN_BOUND_CONSTANT",
    "MIN_BOUND_CONSTANT_UNROUNDED",
    "baker_chain",
    "final_n_bound",
    # Cutoffs
    "BoundReport",
    "bound_report",
    "cutoff_k",
    "hyp_holds",
    "hypothesis_cutoff_k",
    "printed_cutoff_holds",
]
