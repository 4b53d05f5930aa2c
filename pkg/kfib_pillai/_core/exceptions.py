"""Exception hierarchy for the k-Fibonacci Pillai toolkit."""

from typing import Any


class KFibError(Exception):
    """
    Base exception for all toolkit errors.

    Every error raised by the library derives from this class so callers
    (and the CLI exit-code mapping) can catch the whole family at once.
    """

    def __init__(
        self,
        message: str,
        details: str | None = None,
        k: int | None = None,
        operation: str | None = None,
    ) -> None:
        super().__init__(message)
        self.message = message
        self.details = details
        self.k = k
        self.operation = operation

    def __str__(self) -> str:
        if self.k is None and not self.operation and not self.details:
            return self.message

        parts = [self.message]
        if self.k is not None:
            parts.append(f"k: {self.k}")
        if self.operation:
            parts.append(f"Operation: {self.operation}")
        if self.details:
            parts.append(f"Details: {self.details}")
        return " | ".join(parts)


class DomainError(KFibError):
    """An index or argument lies outside the domain where a formula is asserted."""

    def __init__(
        self,
        message: str,
        argument: str | None = None,
        value: Any = None,
        details: str | None = None,
        k: int | None = None,
        operation: str | None = None,
    ) -> None:
        super().__init__(message, details, k, operation)
        self.argument = argument
        self.value = value


class PrecisionError(KFibError):
    """An interval is too wide to certify the requested fact."""

    def __init__(
        self,
        message: str,
        precision_bits: int | None = None,
        details: str | None = None,
        k: int | None = None,
        operation: str | None = None,
    ) -> None:
        super().__init__(message, details, k, operation)
        self.precision_bits = precision_bits


class AmbiguousQuotientError(PrecisionError):
    """A continued-fraction step straddles an integer boundary."""

    def __init__(
        self,
        message: str,
        step: int | None = None,
        precision_bits: int | None = None,
        details: str | None = None,
        k: int | None = None,
    ) -> None:
        super().__init__(message, precision_bits, details, k, "cf_expand")
        self.step = step


class PrecisionExhaustedError(PrecisionError):
    """The precision ladder ran out of doublings."""

    def __init__(
        self,
        message: str,
        precision_bits: int | None = None,
        attempts: int = 0,
        details: str | None = None,
        k: int | None = None,
        operation: str | None = None,
    ) -> None:
        super().__init__(message, precision_bits, details, k, operation)
        self.attempts = attempts


class ReductionError(KFibError):
    """Base exception for Dujella-Pethő reduction failures."""


class NoPositiveEpsilonError(ReductionError):
    """No convergent within the retry cap produced a certified positive epsilon."""

    def __init__(
        self,
        message: str,
        convergents_tried: int = 0,
        details: str | None = None,
        k: int | None = None,
    ) -> None:
        super().__init__(message, details, k, "dp_reduce")
        self.convergents_tried = convergents_tried


class VerificationError(KFibError):
    """Base exception for exact solution verification failures."""


class MismatchError(VerificationError):
    """The two sides of F_n - 2^m = F_n1 - 2^m1 differ."""

    def __init__(
        self,
        message: str,
        lhs: int,
        rhs: int,
        details: str | None = None,
        k: int | None = None,
    ) -> None:
        super().__init__(
            message,
            details or f"lhs={lhs}, rhs={rhs}",
            k,
            "verify_solution",
        )
        self.lhs = lhs
        self.rhs = rhs


class RangeError(VerificationError):
    """A candidate tuple violates n > n1 >= 2 or m > m1 >= 0."""

    def __init__(
        self,
        message: str,
        details: str | None = None,
        k: int | None = None,
    ) -> None:
        super().__init__(message, details, k, "verify_solution")


class InvariantViolationError(KFibError):
    """A property asserted inside a search or sweep failed."""

    def __init__(
        self,
        message: str,
        invariant: str | None = None,
        details: str | None = None,
        k: int | None = None,
        operation: str | None = None,
    ) -> None:
        super().__init__(message, details, k, operation)
        self.invariant = invariant


class CacheError(KFibError):
    """A cache file is corrupt or carries an unsupported version header."""

    def __init__(
        self,
        message: str,
        path: str | None = None,
        line_number: int | None = None,
        details: str | None = None,
    ) -> None:
        super().__init__(message, details, None, "cache_roundtrip")
        self.path = path
        self.line_number = line_number


class ConfigurationError(KFibError):
    """Invalid run configuration or flag combination."""

    def __init__(
        self,
        message: str,
        config_key: str | None = None,
        config_value: Any = None,
        details: str | None = None,
    ) -> None:
        super().__init__(message, details, None, "configure")
        self.config_key = config_key
        self.config_value = config_value
