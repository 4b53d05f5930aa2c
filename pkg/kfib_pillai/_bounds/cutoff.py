"""Where the Baker bound alone closes the problem, and the per-k bound report."""

from fractions import Fraction
from functools import lru_cache
import math

from pydantic import BaseModel, Field, field_serializer

from .._algebraic import (
    DyadicInterval,
    PrecisionPolicy,
    ln2_interval,
    log_interval,
    with_precision_ladder,
)
from .._core.exceptions import PrecisionError
from .._utils import get_logger, validate_order
from .chain import baker_chain, final_n_bound

logger = get_logger(__name__)

# 2.8^3 * 10^123, the cube of the final constant
CUTOFF_CONSTANT = Fraction(28, 10) ** 3 * 10**123
CUTOFF_POLICY = PrecisionPolicy(start_bits=128, max_doublings=4)
# the printed inequality is false for every smaller k
CUTOFF_SCAN_START = 4


def _printed_cutoff_at(k: int, bits: int) -> bool:
    log_k = log_interval(k, bits)
    lhs = log_interval(CUTOFF_CONSTANT, bits) + log_k * 33 + log_interval(log_k) * 21
    rhs = ln2_interval(bits) * k
    if lhs.certainly_lt(rhs):
        return True
    if lhs.certainly_gt(rhs):
        return False
    raise PrecisionError(
        "Cutoff inequality is too close to call",
        precision_bits=bits,
        details=f"lhs={lhs!r}, rhs={rhs!r}",
        k=k,
        operation="printed_cutoff_holds",
    )


def printed_cutoff_holds(k: int) -> bool:
    """
    Certified 2.8^3 10^123 k^33 (log k)^21 < 2^k, compared in log scale.

    Raises:
        PrecisionExhaustedError: If the two sides cannot be separated
    """
    validate_order(k, minimum=CUTOFF_SCAN_START, operation="printed_cutoff_holds")
    return with_precision_ladder(
        lambda bits: _printed_cutoff_at(k, bits), CUTOFF_POLICY, "printed_cutoff_holds", k
    )


@lru_cache(maxsize=1)
def cutoff_k() -> int:
    """Smallest k >= 4 for which the printed cutoff inequality holds."""
    k = CUTOFF_SCAN_START
    while not printed_cutoff_holds(k):
        k += 1
    logger.debug("Cutoff located", cutoff_k=k)
    return k


def hyp_holds(k: int, n: int) -> bool:
    """
    Exact n^3 < 2^(k-5).

    For k < 5 the right side is below 1 and no positive n qualifies.
    """
    if k < 5:
        return False
    return n**3 < 1 << (k - 5)


@lru_cache(maxsize=1)
def hypothesis_cutoff_k() -> int:
    """
    Smallest k with hyp_holds(k, M_k), M_k the final Baker bound.

    M_k^3 < 2^(k-5) implies the printed inequality, so the scan starts at
    :func:`cutoff_k`.
    """
    k = cutoff_k()
    while not hyp_holds(k, final_n_bound(k)):
        k += 1
    logger.debug("Hypothesis cutoff located", hypothesis_cutoff_k=k)
    return k


def _upper_float(interval: DyadicInterval) -> float:
    # a float that is still an upper bound after conversion
    return math.nextafter(float(interval.hi), math.inf)


class BoundReport(BaseModel):
    """Per-k summary of the Baker bounds."""

    k: int = Field(description="Recursion order")
    n_hypothesis: int = Field(description="Value of n used for B := n")
    min_bound: float = Field(description="Upper bound on the smaller gap, 4.25e11 form")
    min_bound_unrounded: float = Field(description="The same bound with 4.2e11")
    max_bound: float = Field(description="Upper bound on the larger gap")
    final_n_bound: int = Field(description="M_k, the absolute bound on n")
    stages_consistent: bool = Field(
        description="Every stated constant dominates its Matveev magnitude"
    )
    cutoff_satisfied: bool = Field(description="hyp_holds(k, M_k)")

    model_config = {"frozen": True}

    @field_serializer("final_n_bound")
    def _serialize_final(self, value: int) -> str:
        return str(value)


def bound_report(k: int) -> BoundReport:
    """Evaluate the bound chain for one k and summarize it."""
    chain = baker_chain(k)
    return BoundReport(
        k=k,
        n_hypothesis=chain.n_hypothesis,
        min_bound=_upper_float(chain.min_bound),
        min_bound_unrounded=_upper_float(chain.min_bound_unrounded),
        max_bound=_upper_float(chain.max_bound),
        final_n_bound=chain.final_n_bound,
        stages_consistent=chain.stages_consistent(),
        cutoff_satisfied=hyp_holds(k, chain.final_n_bound),
    )
