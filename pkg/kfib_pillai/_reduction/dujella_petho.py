"""The Dujella-Pethő reduction lemma with certified arithmetic."""

from fractions import Fraction
import math

from pydantic import BaseModel, Field, field_validator, model_validator

from .._algebraic import DyadicInterval, log_interval
from .._core.exceptions import (
    AmbiguousQuotientError,
    NoPositiveEpsilonError,
    PrecisionError,
)
from .._utils import get_logger
from .continued_fraction import CFExpansion, cf_expand, distance_to_nearest_integer

logger = get_logger(__name__)

# convergents tried after the first one with q > 6M
MAX_RETRIES = 25
Q_FACTOR = 6


def _as_interval(value: object, precision: int) -> DyadicInterval:
    if isinstance(value, DyadicInterval):
        return value
    if isinstance(value, int | Fraction):
        return DyadicInterval.exact(value, precision)
    raise TypeError(f"Cannot use {type(value).__name__} as an interval")


class ReductionInstance(BaseModel):
    """
    Data (tau, mu, A, B, M) for 0 < |u tau - v + mu| < A B^(-w) with u <= M.

    A and B may be given as exact rationals or as enclosures of irrationals.
    """

    tau: DyadicInterval = Field(description="Irrational slope")
    mu: DyadicInterval = Field(description="Inhomogeneous term")
    A: DyadicInterval = Field(description="Positive constant of the upper bound")
    B: DyadicInterval = Field(description="Base of the upper bound, above 1")
    M: int = Field(ge=1, description="Upper bound on u")

    model_config = {"frozen": True, "arbitrary_types_allowed": True}

    @field_validator("A", "B", mode="before")
    @classmethod
    def _coerce_constant(cls, value: object) -> DyadicInterval:
        return _as_interval(value, 64)

    @model_validator(mode="after")
    def _check_constants(self) -> "ReductionInstance":
        if not self.A.is_positive():
            raise ValueError("A must be certainly positive")
        if not self.B.certainly_gt(1):
            raise ValueError("B must be certainly above 1")
        return self


class ReductionOutcome(BaseModel):
    """Successful reduction: no solution has w >= w_bound."""

    q_used: int = Field(description="Denominator of the convergent used")
    convergent_index: int = Field(description="Index of that convergent")
    attempts: int = Field(description="Convergents tried, including the successful one")
    epsilon: DyadicInterval = Field(description="||mu q|| - M ||tau q||, certified positive")
    w_bound: int = Field(description="ceil(log(A q / epsilon) / log B), rounded outward")

    model_config = {"frozen": True, "arbitrary_types_allowed": True}


def reduction_epsilon(instance: ReductionInstance, q: int) -> DyadicInterval:
    """Enclosure of ||mu q|| - M ||tau q||."""
    return distance_to_nearest_integer(instance.mu * q) - distance_to_nearest_integer(
        instance.tau * q
    ) * instance.M


def w_bound_for(
    A: DyadicInterval | int | Fraction,  # noqa: N803
    B: DyadicInterval | int | Fraction,  # noqa: N803
    q: int,
    epsilon: DyadicInterval,
) -> int:
    """ceil of the upper end of log(A q / epsilon) / log B."""
    precision = epsilon.precision
    A = _as_interval(A, precision)  # noqa: N806
    B = _as_interval(B, precision)  # noqa: N806
    ratio = log_interval(A * q / epsilon, precision) / log_interval(B, precision)
    return math.ceil(ratio.hi)


def dp_reduce(
    instance: ReductionInstance,
    expansion: CFExpansion | None = None,
    max_retries: int = MAX_RETRIES,
) -> ReductionOutcome:
    """
    Reduce a Baker bound M on u to a bound on w.

    Starts at the first convergent of tau with q > 6M and moves on to later
    convergents while epsilon is not certifiably positive.

    Args:
        instance: The reduction data
        expansion: Precomputed expansion of tau, shared across instances
        max_retries: Convergents tried after the first admissible one

    Raises:
        NoPositiveEpsilonError: If epsilon is certainly non-positive for
            every convergent tried
        PrecisionError: If a convergent or an epsilon could not be
            certified at the current precision
    """
    q_limit = Q_FACTOR * instance.M
    if expansion is None:
        expansion = cf_expand(instance.tau, q_limit=q_limit, extra=max_retries)
    start = expansion.first_index_above(q_limit)
    if start is None:
        raise AmbiguousQuotientError(
            "No certified convergent with q > 6M",
            step=expansion.ambiguous_at,
            precision_bits=instance.tau.precision,
            details=f"M={instance.M}, quotients={len(expansion.quotients)}",
        )

    uncertified = 0
    attempts = 0
    for index in range(start, min(start + max_retries + 1, len(expansion.convergents))):
        attempts += 1
        q = expansion.convergents[index][1]
        epsilon = reduction_epsilon(instance, q)
        if epsilon.is_positive():
            w_bound = w_bound_for(instance.A, instance.B, q, epsilon)
            logger.debug(
                "Reduction succeeded",
                convergent_index=index,
                attempts=attempts,
                w_bound=w_bound,
            )
            return ReductionOutcome(
                q_used=q,
                convergent_index=index,
                attempts=attempts,
                epsilon=epsilon,
                w_bound=w_bound,
            )
        if epsilon.hi > 0:
            uncertified += 1

    if uncertified or (attempts <= max_retries and not expansion.terminated):
        raise PrecisionError(
            "Epsilon could not be certified positive at this precision",
            precision_bits=instance.tau.precision,
            details=f"attempts={attempts}, uncertified={uncertified}",
            operation="dp_reduce",
        )
    raise NoPositiveEpsilonError(
        "No convergent produced a positive epsilon",
        convergents_tried=attempts,
        details=f"M={instance.M}, first q={expansion.convergents[start][1]}",
    )
