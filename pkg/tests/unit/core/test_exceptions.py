"""Tests for the exception hierarchy."""

import pytest

from kfib_pillai import (
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


class TestExceptionHierarchy:
    """Test exception hierarchy and behavior."""

    def test_base_error_plain_message(self) -> None:
        """A bare KFibError renders as its message."""
        error = KFibError("Base error")
        assert str(error) == "Base error"
        assert isinstance(error, Exception)

    def test_base_error_joins_context(self) -> None:
        """Context parts are joined with a pipe."""
        error = KFibError("Failed", details="width 2^-10", k=4, operation="f_k_value")
        assert str(error) == "Failed | k: 4 | Operation: f_k_value | Details: width 2^-10"

    @pytest.mark.parametrize(
        ("error_type", "parents"),
        [
            (DomainError, (KFibError,)),
            (PrecisionError, (KFibError,)),
            (AmbiguousQuotientError, (PrecisionError, KFibError)),
            (PrecisionExhaustedError, (PrecisionError, KFibError)),
            (ReductionError, (KFibError,)),
            (NoPositiveEpsilonError, (ReductionError, KFibError)),
            (VerificationError, (KFibError,)),
            (RangeError, (VerificationError, KFibError)),
            (InvariantViolationError, (KFibError,)),
            (CacheError, (KFibError,)),
            (ConfigurationError, (KFibError,)),
        ],
    )
    def test_inheritance(self, error_type: type[KFibError], parents: tuple[type, ...]) -> None:
        """Every error derives from KFibError through its family."""
        error = error_type("message")
        for parent in parents:
            assert isinstance(error, parent)

    def test_mismatch_carries_both_sides(self) -> None:
        """MismatchError records both values and names the operation."""
        error = MismatchError("Sides differ", lhs=7, rhs=-3, k=4)
        assert isinstance(error, VerificationError)
        assert (error.lhs, error.rhs) == (7, -3)
        assert "lhs=7, rhs=-3" in str(error)
        assert error.operation == "verify_solution"

    def test_precision_error_attributes(self) -> None:
        """Precision errors carry the precision that failed."""
        error = AmbiguousQuotientError("Straddles", step=12, precision_bits=512)
        assert error.step == 12
        assert error.precision_bits == 512
        assert error.operation == "cf_expand"

    def test_exhausted_attempts(self) -> None:
        """PrecisionExhaustedError records how many rungs were tried."""
        error = PrecisionExhaustedError("Out of bits", precision_bits=8192, attempts=6)
        assert error.attempts == 6

    def test_cache_error_location(self) -> None:
        """CacheError points at the offending line."""
        error = CacheError("Corrupt", path="/tmp/kfib.cache", line_number=3)
        assert error.path == "/tmp/kfib.cache"
        assert error.line_number == 3
        assert error.operation == "cache_roundtrip"

    def test_domain_error_argument(self) -> None:
        """DomainError keeps the argument and value."""
        error = DomainError("Bad n", argument="n", value=-7, k=4)
        assert error.argument == "n"
        assert error.value == -7

    def test_raise_and_catch_as_base(self) -> None:
        """The CLI catches the whole family through KFibError."""
        with pytest.raises(KFibError):
            raise NoPositiveEpsilonError("No epsilon", convergents_tried=25)
