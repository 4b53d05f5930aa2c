"""Dominant root alpha(k), f_k(alpha) and the Binet-like residual."""

from fractions import Fraction
from functools import lru_cache
import time
from typing import Protocol

import gmpy2
from pydantic import BaseModel, Field

from .._core.exceptions import InvariantViolationError, PrecisionError
from .._hooks import EventHook, emit_event
from .._sequence import kfib_term
from .._utils import (
    get_logger,
    log_root_computed,
    validate_index,
    validate_order,
    validate_precision,
)
from .dyadic import DyadicInterval, Number

logger = get_logger(__name__)

# extra significant bits carried by the alpha interval beyond the requested width
ROOT_GUARD_BITS = 16
# automatic precisions are rounded up to a multiple of this, so roots get reused
PRECISION_QUANTUM = 128


class DominantRoot(BaseModel):
    """Certified enclosure of the dominant root of x^k - x^(k-1) - ... - 1."""

    k: int = Field(description="Recursion order")
    alpha: DyadicInterval = Field(description="Enclosure of alpha(k)")
    precision_bits: int = Field(description="Width of alpha is below 2^-precision_bits")

    model_config = {"frozen": True, "arbitrary_types_allowed": True}


class RootStore(Protocol):
    """Persistent store consulted before bisection."""

    def get_root(self, k: int, precision_bits: int) -> DominantRoot | None: ...

    def put_root(self, root: DominantRoot) -> None: ...


_default_store: RootStore | None = None


def psi_eval(k: int, x: Number) -> Fraction:
    """Exact value of x^k - x^(k-1) - ... - x - 1."""
    x = Fraction(x)
    accumulator = Fraction(1)
    for _ in range(k):
        accumulator = accumulator * x - 1
    return accumulator


def psi_interval(k: int, x: DyadicInterval) -> DyadicInterval:
    """Interval Horner evaluation of the characteristic polynomial."""
    accumulator = DyadicInterval(1, 1, x.precision)
    for _ in range(k):
        accumulator = accumulator * x - 1
    return accumulator


def _psi_sign(k: int, numerator: int, scale: int) -> int:
    """
    Sign of Psi_k(numerator / 2^scale) for arguments above 1.

    For x > 1, (x - 1) Psi_k(x) = x^k (x - 2) + 1, and clearing 2^(scale (k+1))
    leaves a^k (a - 2^(scale+1)) + 2^(scale (k+1)).
    """
    a = gmpy2.mpz(numerator)
    value = a**k * (a - (gmpy2.mpz(1) << (scale + 1))) + (gmpy2.mpz(1) << (scale * (k + 1)))
    return (value > 0) - (value < 0)


@lru_cache(maxsize=512)
def _bisect_root(k: int, precision_bits: int) -> DominantRoot:
    started = time.perf_counter()
    scale = max(precision_bits + 1, k + 1)
    # bracket (2 (1 - 2^-k), 2) scaled by 2^scale
    lo = ((1 << (k + 1)) - 2) << (scale - k)
    hi = 1 << (scale + 1)
    while hi - lo > 1:
        mid = (lo + hi) >> 1
        sign = _psi_sign(k, mid, scale)
        if sign < 0:
            lo = mid
        elif sign > 0:
            hi = mid
        else:
            lo = hi = mid
    _certify_bracket(k, lo, hi, scale)
    alpha = DyadicInterval(
        Fraction(lo, 1 << scale),
        Fraction(hi, 1 << scale),
        scale + ROOT_GUARD_BITS,
    )
    root = DominantRoot(k=k, alpha=alpha, precision_bits=precision_bits)
    _certify_root(root)
    elapsed_ms = (time.perf_counter() - started) * 1000
    log_root_computed(k, precision_bits, "bisection", elapsed_ms)
    emit_event(
        EventHook.ROOT_COMPUTED,
        {"k": k, "precision_bits": precision_bits, "elapsed_ms": elapsed_ms},
    )
    return root


def _certify_bracket(k: int, lo: int, hi: int, scale: int) -> None:
    if lo == hi:
        return
    if not _psi_sign(k, lo, scale) < 0 < _psi_sign(k, hi, scale):
        raise InvariantViolationError(
            "Root enclosure lost its sign change",
            invariant="psi(lo) < 0 < psi(hi)",
            k=k,
            operation="dominant_root",
        )


def _certify_root(root: DominantRoot) -> None:
    k, alpha = root.k, root.alpha
    lower_bracket = 2 * (1 - Fraction(1, 1 << k))
    if not (lower_bracket < alpha.lo and alpha.hi < 2):
        raise InvariantViolationError(
            "Root enclosure left the bracket (2(1-2^-k), 2)",
            invariant="bracket",
            k=k,
            operation="dominant_root",
        )
    if not alpha.width < Fraction(1, 1 << root.precision_bits):
        raise InvariantViolationError(
            "Root enclosure is wider than requested",
            invariant="width",
            k=k,
            operation="dominant_root",
        )


def dominant_root(
    k: int,
    precision_bits: int = 256,
    store: RootStore | None = None,
) -> DominantRoot:
    """
    Certified enclosure of alpha(k) by bisection on exact sign tests.

    Args:
        k: Recursion order, at least 2
        precision_bits: The enclosure is narrower than 2^-precision_bits
        store: Optional persistent cache consulted before bisecting

    Returns:
        DominantRoot with Psi_k(lo) < 0 < Psi_k(hi)
    """
    validate_order(k, operation="dominant_root")
    validate_precision(precision_bits, operation="dominant_root")
    if store is None:
        store = _default_store
    if store is not None:
        cached = store.get_root(k, precision_bits)
        if cached is not None:
            log_root_computed(k, precision_bits, "cache", 0.0)
            emit_event(
                EventHook.ROOT_CACHE_HIT, {"k": k, "precision_bits": precision_bits}
            )
            return cached
    root = _bisect_root(k, precision_bits)
    if store is not None:
        store.put_root(root)
    return root


def set_root_store(store: RootStore | None) -> None:
    """Install the store every root lookup consults when none is passed."""
    global _default_store
    _default_store = store


def get_root_store() -> RootStore | None:
    return _default_store


def clear_root_cache() -> None:
    """Forget in-memory root enclosures."""
    _bisect_root.cache_clear()


def f_k_of(k: int, alpha: DyadicInterval) -> DyadicInterval:
    """Enclosure of f_k(z) = (z - 1) / (2 + (k + 1)(z - 2)) at an interval z."""
    return (alpha - 1) / ((alpha - 2) * (k + 1) + 2)


def f_k_value(
    k: int,
    precision_bits: int = 256,
    store: RootStore | None = None,
) -> DyadicInterval:
    """
    Enclosure of f_k(alpha), certified to lie in (1/2, 3/4).

    Raises:
        PrecisionError: If the enclosure is too wide to certify membership
    """
    root = dominant_root(k, precision_bits, store)
    value = f_k_of(k, root.alpha)
    if not (value.certainly_gt(Fraction(1, 2)) and value.certainly_lt(Fraction(3, 4))):
        raise PrecisionError(
            "Cannot certify 1/2 < f_k(alpha) < 3/4",
            precision_bits=precision_bits,
            details=repr(value),
            k=k,
            operation="f_k_value",
        )
    return value


def working_precision(requested_bits: int, n: int) -> int:
    """
    Precision needed to resolve alpha^(n-1) to better than 1/4.

    alpha^(n-1) has about n integer bits, so the root must carry n plus a
    margin of fractional bits.
    """
    needed = max(requested_bits, n + max(n, 1).bit_length() + 32)
    return -(-needed // PRECISION_QUANTUM) * PRECISION_QUANTUM


def binet_residual(k: int, n: int, precision_bits: int = 256) -> DyadicInterval:
    """
    Enclosure of F_n^(k) - f_k(alpha) alpha^(n-1), certified inside (-1/2, 1/2).

    The working precision grows with n so that the check stays certifiable.

    Raises:
        PrecisionError: If the enclosure straddles +-1/2
    """
    validate_order(k, operation="binet_residual")
    validate_index(k, n, 2 - k, operation="binet_residual")
    bits = working_precision(precision_bits, abs(n))
    alpha = dominant_root(k, bits).alpha
    residual = kfib_term(k, n) - f_k_of(k, alpha) * alpha ** (n - 1)
    half = Fraction(1, 2)
    if not (residual.certainly_gt(-half) and residual.certainly_lt(half)):
        raise PrecisionError(
            "Cannot certify |F_n - f_k(alpha) alpha^(n-1)| < 1/2",
            precision_bits=bits,
            details=f"n={n}, residual={residual!r}",
            k=k,
            operation="binet_residual",
        )
    return residual


def dominance_holds(k: int, n: int, precision_bits: int = 256) -> bool:
    """Certified alpha^(n-2) <= F_n^(k) <= alpha^(n-1) for n >= 1."""
    validate_order(k, operation="dominance_holds")
    validate_index(k, n, 1, operation="dominance_holds")
    bits = working_precision(precision_bits, n)
    alpha = dominant_root(k, bits).alpha
    term = kfib_term(k, n)
    return (alpha ** (n - 2)).hi <= term <= (alpha ** (n - 1)).lo
