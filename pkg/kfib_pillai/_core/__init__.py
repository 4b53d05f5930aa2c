"""Core error types shared by every toolkit module."""

from .exceptions import (
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

__all__ = [
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
]
