"""Precision policies and the doubling ladder."""

from collections.abc import Callable
from typing import TypeVar

from pydantic import BaseModel, Field

from .._core.exceptions import PrecisionError, PrecisionExhaustedError
from .._hooks import EventHook, emit_event
from .._utils import log_precision_escalation

T = TypeVar("T")


class PrecisionPolicy(BaseModel):
    """Starting precision and how many times it may be doubled."""

    start_bits: int = Field(default=256, ge=16, description="First precision tried")
    max_doublings: int = Field(
        default=5, ge=0, description="Doublings allowed after the first attempt"
    )

    model_config = {"frozen": True}

    def ladder(self) -> list[int]:
        """Every precision the policy will try, in order."""
        return [self.start_bits << i for i in range(self.max_doublings + 1)]


SEQUENCE_POLICY = PrecisionPolicy(start_bits=256)
REDUCTION_POLICY = PrecisionPolicy(start_bits=2200)


def with_precision_ladder(
    compute: Callable[[int], T],
    policy: PrecisionPolicy,
    operation: str,
    k: int | None = None,
) -> T:
    """
    Run ``compute(bits)`` with increasing precision until it certifies.

    Args:
        compute: Function of the working precision; raises PrecisionError
            when its result cannot be certified
        policy: Starting bits and doubling cap
        operation: Name used in logs and events
        k: Recursion order, for diagnostics

    Raises:
        PrecisionExhaustedError: If every rung fails
    """
    ladder = policy.ladder()
    last_error: PrecisionError | None = None
    for index, bits in enumerate(ladder):
        try:
            return compute(bits)
        except PrecisionExhaustedError:
            raise
        except PrecisionError as error:
            last_error = error
            if index + 1 < len(ladder):
                next_bits = ladder[index + 1]
                log_precision_escalation(operation, bits, next_bits, error.message, k=k)
                emit_event(
                    EventHook.PRECISION_ESCALATED,
                    {
                        "operation": operation,
                        "k": k,
                        "from_bits": bits,
                        "to_bits": next_bits,
                        "reason": error.message,
                    },
                )
    raise PrecisionExhaustedError(
        f"Could not certify {operation} within the precision ladder",
        precision_bits=ladder[-1],
        attempts=len(ladder),
        details=last_error.message if last_error else None,
        k=k,
        operation=operation,
    )
