"""The Baker bound chain: from Matveev's theorem to an absolute bound on n."""

from fractions import Fraction
from functools import lru_cache
import math

from pydantic import BaseModel, Field

from .._algebraic import (
    DyadicInterval,
    PrecisionPolicy,
    ln2_interval,
    log_interval,
    with_precision_ladder,
)
from .._utils import get_logger, validate_index, validate_order
from .heights import LinearForm, linear_form_inputs
from .matveev import matveev_magnitude

logger = get_logger(__name__)

# Decimal constants of the chain, kept exact.
MIN_BOUND_CONSTANT = Fraction("4.25e11")
MIN_BOUND_CONSTANT_UNROUNDED = Fraction("4.2e11")
LAMBDA_ONE_CONSTANT = Fraction("4.13e22")
MAX_BOUND_CONSTANT = Fraction("4.2e22")
STAGE_THREE_CONSTANT = Fraction("7.3e33")
CLOSURE_CONSTANT = Fraction("5.1e34")
FINAL_CONSTANT = Fraction("2.8e41")
CLOSURE_FACTOR = 16

DEFAULT_N_HYPOTHESIS = 1600
BOUND_POLICY = PrecisionPolicy(start_bits=512, max_doublings=3)


class BoundChain(BaseModel):
    """
    Certified evaluation of the three-stage chain for one k.

    Bounds are intervals; only their upper ends are meaningful as bounds.
    """

    k: int = Field(description="Recursion order")
    n_hypothesis: int = Field(description="Value of n used for B := n")
    min_bound: DyadicInterval = Field(
        description="4.25e11 k^4 log^2 k (1 + log n): bound on the smaller gap"
    )
    min_bound_unrounded: DyadicInterval = Field(
        description="4.2e11 k^4 log^2 k (1 + log n): the same bound before rounding"
    )
    max_bound: DyadicInterval = Field(
        description="4.2e22 k^7 log^3 k (1 + log n)^2: bound on the larger gap"
    )
    lambda_magnitude: DyadicInterval = Field(
        description="Matveev magnitude for the first linear form"
    )
    lambda1_magnitude: DyadicInterval = Field(
        description="Matveev magnitude for the second-stage forms"
    )
    lambda3_magnitude: DyadicInterval = Field(
        description="Matveev magnitude for the third-stage form"
    )
    closure_a: DyadicInterval = Field(description="A = 5.1e34 k^11 log^4 k")
    closure_n_bound: int = Field(description="floor(16 A log^3 A)")
    final_n_bound: int = Field(description="floor(2.8e41 k^11 log^7 k)")

    model_config = {"frozen": True, "arbitrary_types_allowed": True}

    def stages_consistent(self) -> bool:
        """
        Every stated constant dominates the Matveev magnitude it summarizes,
        and the stage bounds are ordered as in :meth:`is_consistent`.
        """
        if not self.is_consistent():
            return False
        k = self.k
        log_k = log_interval(k, self.min_bound.precision)
        log_n_term = log_interval(self.n_hypothesis, self.min_bound.precision) + 1
        lambda_stated = MIN_BOUND_CONSTANT_UNROUNDED * k**4 * log_k**2 * log_n_term
        lambda1_stated = LAMBDA_ONE_CONSTANT * k**7 * log_k**3 * log_n_term**2
        lambda3_stated = STAGE_THREE_CONSTANT * k**11 * log_k**4 * log_n_term**3
        return (
            self.lambda_magnitude.certainly_lt(lambda_stated)
            and self.lambda1_magnitude.certainly_lt(lambda1_stated)
            and self.lambda3_magnitude.certainly_lt(lambda3_stated)
        )

    def is_consistent(self) -> bool:
        """min_bound <= max_bound <= M_k log 2, with the closure bound below M_k."""
        implied = ln2_interval(self.max_bound.precision) * self.final_n_bound
        return (
            self.min_bound.hi <= self.max_bound.lo
            and self.max_bound.certainly_lt(implied)
            and self.closure_n_bound <= self.final_n_bound
        )


def _final_n_bound_at(k: int, bits: int) -> int:
    log_k = log_interval(k, bits)
    return (FINAL_CONSTANT * k**11 * log_k**7).floor()


@lru_cache(maxsize=4096)
def final_n_bound(k: int) -> int:
    """M_k = floor(2.8e41 k^11 log^7 k), the absolute bound on n for this k."""
    validate_order(k, minimum=2, operation="final_n_bound")
    return with_precision_ladder(
        lambda bits: _final_n_bound_at(k, bits), BOUND_POLICY, "final_n_bound", k
    )


def _magnitude(form: LinearForm, k: int, n: int, bits: int) -> DyadicInterval:
    return matveev_magnitude(linear_form_inputs(form, k, n, precision=bits), bits)


def _chain_at(k: int, n: int, bits: int) -> BoundChain:
    log_k = log_interval(k, bits)
    log_n_term = log_interval(n, bits) + 1
    closure_a = CLOSURE_CONSTANT * k**11 * log_k**4
    closure = CLOSURE_FACTOR * closure_a * log_interval(closure_a, bits) ** 3
    return BoundChain(
        k=k,
        n_hypothesis=n,
        min_bound=MIN_BOUND_CONSTANT * k**4 * log_k**2 * log_n_term,
        min_bound_unrounded=MIN_BOUND_CONSTANT_UNROUNDED * k**4 * log_k**2 * log_n_term,
        max_bound=MAX_BOUND_CONSTANT * k**7 * log_k**3 * log_n_term**2,
        lambda_magnitude=_magnitude("lambda", k, n, bits),
        lambda1_magnitude=_magnitude("lambda1", k, n, bits),
        lambda3_magnitude=_magnitude("lambda3", k, n, bits),
        closure_a=closure_a,
        closure_n_bound=math.floor(closure.hi),
        final_n_bound=_final_n_bound_at(k, bits),
    )


def baker_chain(k: int, n_hypothesis: int | None = None) -> BoundChain:
    """
    Evaluate the bound chain with B := n.

    Starting from ``n_hypothesis`` (1600 by default) the chain is evaluated
    once, then re-evaluated at its own final bound, which is a fixed point
    because the final bound does not depend on n.

    Args:
        k: Recursion order, at least 4
        n_hypothesis: Initial value of n for the B := n substitution
    """
    validate_order(k, minimum=4, operation="baker_chain")
    n = DEFAULT_N_HYPOTHESIS if n_hypothesis is None else n_hypothesis
    validate_index(k, n, minimum=2, operation="baker_chain")
    chain: BoundChain | None = None
    for _ in range(2):
        current = n
        chain = with_precision_ladder(
            lambda bits: _chain_at(k, current, bits), BOUND_POLICY, "baker_chain", k
        )
        if chain.final_n_bound == n:
            break
        n = chain.final_n_bound
    assert chain is not None
    logger.debug(
        "Baker chain evaluated",
        k=k,
        n_hypothesis=chain.n_hypothesis,
        final_n_bound=str(chain.final_n_bound),
    )
    return chain
