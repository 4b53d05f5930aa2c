"""Closed-form and asymptotic expansions of F_n^(k) in powers of two."""

from fractions import Fraction

from pydantic import BaseModel, Field

from .._core.exceptions import VerificationError
from .._utils import binomial, get_logger, validate_index, validate_order
from .kfib import kfib_term

logger = get_logger(__name__)


class GomezEstimate(BaseModel):
    """
    Second-order expansion of F_n^(k) / 2^(n-2) with its exact residual.

    main_term + 2^(n-2) * zeta equals F_n^(k) exactly.
    """

    k: int = Field(description="Recursion order")
    n: int = Field(description="Sequence index")
    main_term: Fraction = Field(
        description="2^(n-2) (1 + (k-n)/2^(k+1) + f(k,n)/2^(2k+2))"
    )
    zeta: Fraction = Field(description="Exact residual")
    zeta_bound: Fraction = Field(description="4 n^3 / 2^(3k+3)")

    model_config = {"frozen": True, "arbitrary_types_allowed": True}

    @property
    def bound_asserted(self) -> bool:
        """The residual bound is only claimed for n >= 2k + 3."""
        return self.n >= 2 * self.k + 3

    @property
    def within_bound(self) -> bool:
        """Exact comparison |zeta| < zeta_bound."""
        return abs(self.zeta) < self.zeta_bound


def cooper_howard_coefficient(k: int, n: int, j: int) -> int:
    """C_(n,j) = (-1)^j (C(n-jk, j) - C(n-jk-2, j-2))."""
    sign = -1 if j % 2 else 1
    return sign * (binomial(n - j * k, j) - binomial(n - j * k - 2, j - 2))


def cooper_howard(k: int, n: int) -> int:
    """
    Evaluate the full Cooper-Howard expansion of F_n^(k).

    F_n = 2^(n-2) + sum_{j=1}^{J} C_(n,j) 2^(n-(k+1)j-2), J = (n+k)//(k+1) - 1.
    The last exponent can be -1, so the sum is accumulated doubled.

    Raises:
        DomainError: If n < k + 2
    """
    validate_order(k, operation="cooper_howard")
    validate_index(k, n, k + 2, operation="cooper_howard")

    doubled = 1 << (n - 1)
    for j in range(1, (n + k) // (k + 1)):
        # exponent of the doubled term, >= 0 throughout the summation range
        exponent = n - (k + 1) * j - 1
        if exponent < 0:
            raise VerificationError(
                "Cooper-Howard exponent fell below -1",
                details=f"j={j}, exponent={exponent - 1}",
                k=k,
                operation="cooper_howard",
            )
        doubled += cooper_howard_coefficient(k, n, j) << exponent
    if doubled % 2:
        raise VerificationError(
            "Cooper-Howard sum is not an integer",
            details=f"doubled sum {doubled} is odd",
            k=k,
            operation="cooper_howard",
        )
    return doubled // 2


def cooper_two_term(k: int, n: int) -> int:
    """
    Two-term form 2^(n-2) - (n-k) 2^(n-k-3), exact for k+2 <= n <= 2k+2.

    Raises:
        DomainError: If n is outside [k + 2, 2k + 2]
    """
    validate_order(k, operation="cooper_two_term")
    validate_index(k, n, k + 2, operation="cooper_two_term", maximum=2 * k + 2)
    return ((1 << (n - 1)) - ((n - k) << (n - k - 2))) // 2


def gomez_f(k: int, n: int) -> Fraction:
    """f(k, n) = (z - 1)(z + 2) / 2 with z = 2k - n."""
    z = 2 * k - n
    return Fraction((z - 1) * (z + 2), 2)


def gomez_estimate(k: int, n: int) -> GomezEstimate:
    """
    Exact second-order estimate of F_n^(k) for n < 2^k.

    The residual bound 4n^3/2^(3k+3) is asserted only for n >= 2k + 3; below
    that the j = 2 correction is spurious and zeta equals -f(k,n)/2^(2k+2).

    Raises:
        DomainError: If n >= 2^k
    """
    validate_order(k, operation="gomez_estimate")
    validate_index(k, n, 2 - k, operation="gomez_estimate", maximum=(1 << k) - 1)

    scale = Fraction(2) ** (n - 2)
    relative = (
        1
        + Fraction(k - n, 1 << (k + 1))
        + gomez_f(k, n) / (1 << (2 * k + 2))
    )
    zeta = Fraction(kfib_term(k, n)) / scale - relative
    estimate = GomezEstimate(
        k=k,
        n=n,
        main_term=scale * relative,
        zeta=zeta,
        zeta_bound=Fraction(4 * n**3, 1 << (3 * k + 3)),
    )
    if estimate.bound_asserted and not estimate.within_bound:
        logger.warning("Residual exceeds its bound", k=k, n=n, zeta=str(zeta))
    return estimate
