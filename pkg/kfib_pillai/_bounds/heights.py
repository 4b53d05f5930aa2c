"""Logarithmic heights and the Matveev data of the four linear forms."""

from fractions import Fraction
from typing import Literal

from .._algebraic import DyadicInterval, dominant_root, ln2_interval, log_interval
from .._core.exceptions import DomainError
from .._utils import validate_order
from .matveev import MatveevInputs

LinearForm = Literal["lambda", "lambda1", "lambda2", "lambda3"]

# A_1 when the exponent gaps are only known through the Baker chain
STAGE_ONE_A1 = Fraction(3 * 10**11)
STAGE_THREE_A1 = Fraction(53 * 10**21)


def rational_height(value: Fraction | int, precision: int = 256) -> DyadicInterval:
    """h(p/q) = log max(|p|, q) for p/q in lowest terms."""
    value = Fraction(value)
    if value == 0:
        return DyadicInterval(0, 0, precision)
    return log_interval(max(abs(value.numerator), value.denominator), precision)


def height_sum(first: DyadicInterval, second: DyadicInterval) -> DyadicInterval:
    """h(x + y) <= h(x) + h(y) + log 2."""
    return first + second + ln2_interval(max(first.precision, second.precision))


def height_product(first: DyadicInterval, second: DyadicInterval) -> DyadicInterval:
    """h(x y) <= h(x) + h(y)."""
    return first + second


def height_power(height: DyadicInterval, exponent: int) -> DyadicInterval:
    """h(x^s) = |s| h(x)."""
    return height * abs(exponent)


def f_k_height_bound(k: int, precision: int = 256) -> DyadicInterval:
    """The bound h(f_k(alpha)) < 3 log k, consumed as given."""
    return log_interval(k, precision) * 3


def _alpha_height(k: int, precision: int) -> DyadicInterval:
    # h(alpha) = log(alpha) / k for the unit alpha
    alpha = dominant_root(k, precision).alpha
    return log_interval(alpha, precision) / k


def _gap_height(k: int, l: int, precision: int) -> DyadicInterval:  # noqa: E741
    # h(alpha^l - 1)
    return height_sum(height_power(_alpha_height(k, precision), l), rational_height(1, precision))


def linear_form_inputs(
    form: LinearForm,
    k: int,
    n: int,
    l: int | None = None,  # noqa: E741
    j: int | None = None,
    precision: int = 256,
) -> MatveevInputs:
    """
    Matveev data (t=3, D=k, B=n) for one of the four linear forms.

    gamma_2 = alpha and gamma_3 = 2 give A_2 = log 2 and A_3 = k log 2
    throughout. A_1 is 3k log k for lambda. For the other forms it comes from
    the height calculus when the gaps l = n - n1 and j = m - m1 are supplied,
    and from the stated Baker-chain constants otherwise.

    Raises:
        DomainError: If a required gap is missing for the derived A_1
    """
    validate_order(k, minimum=4, operation="linear_form_inputs")
    log_k = log_interval(k, precision)
    log_n_term = log_interval(n, precision) + 1
    ln2 = ln2_interval(precision)
    f_height = f_k_height_bound(k, precision)

    if form == "lambda":
        a1 = f_height * k
    elif form == "lambda1":
        if l is None:
            a1 = STAGE_ONE_A1 * k**4 * log_k**2 * log_n_term
        else:
            gap_height = _gap_height(k, l, precision)
            a1 = height_product(f_height, gap_height) * k
    elif form == "lambda2":
        if j is None:
            a1 = STAGE_ONE_A1 * k**4 * log_k**2 * log_n_term
        else:
            a1 = height_product(f_height, rational_height((1 << j) - 1, precision)) * k
    elif form == "lambda3":
        if l is None or j is None:
            a1 = STAGE_THREE_A1 * k**8 * log_k**3 * log_n_term**2
        else:
            gap_height = _gap_height(k, l, precision)
            a1 = (
                height_product(
                    height_product(f_height, gap_height),
                    rational_height((1 << j) - 1, precision),
                )
                * k
            )
    else:
        raise DomainError(f"Unknown linear form {form!r}", argument="form", value=form)

    return MatveevInputs(t=3, D=k, B=n, A=[a1, ln2, ln2 * k])
