"""Matveev's lower bound for linear forms in logarithms."""

from fractions import Fraction

from pydantic import BaseModel, Field, field_validator, model_validator

from .._algebraic import DyadicInterval, log_interval, sqrt_interval

MATVEEV_FACTOR = Fraction(14, 10)
MIN_HEIGHT_PARAMETER = Fraction(16, 100)


def _as_interval(value: object) -> DyadicInterval:
    if isinstance(value, DyadicInterval):
        return value
    if isinstance(value, float):
        # decimal literal as written, not its binary approximation
        return DyadicInterval.exact(Fraction(repr(value)))
    if isinstance(value, int | Fraction | str):
        return DyadicInterval.exact(Fraction(value))
    raise TypeError(f"Cannot use {type(value).__name__} as a height parameter")


class MatveevInputs(BaseModel):
    """
    Data (t, D, B, A_1..A_t) of one application of the lower bound.

    The caller guarantees A_i >= max(D h(gamma_i), |log gamma_i|, 0.16); the
    model can only check the absolute floor 0.16.
    """

    t: int = Field(ge=1, description="Number of logarithms")
    D: int = Field(ge=1, description="Degree of the number field")
    B: int = Field(ge=1, description="Upper bound on the exponents |b_i|")
    A: list[DyadicInterval] = Field(description="Height parameters A_1..A_t")

    model_config = {"frozen": True, "arbitrary_types_allowed": True}

    @field_validator("A", mode="before")
    @classmethod
    def _coerce_heights(cls, values: list[object]) -> list[DyadicInterval]:
        return [_as_interval(value) for value in values]

    @model_validator(mode="after")
    def _check_heights(self) -> "MatveevInputs":
        if len(self.A) != self.t:
            raise ValueError(f"expected {self.t} height parameters, got {len(self.A)}")
        for index, value in enumerate(self.A, start=1):
            if value.certainly_lt(MIN_HEIGHT_PARAMETER):
                raise ValueError(f"A_{index} must be at least 0.16")
        return self


def matveev_magnitude(inputs: MatveevInputs, precision: int = 256) -> DyadicInterval:
    """
    Enclosure of 1.4 * 30^(t+3) * t^4.5 * D^2 (1 + log D)(1 + log B) A_1 ... A_t.
    """
    t, d, b = inputs.t, inputs.D, inputs.B
    t_power = DyadicInterval.exact(t**4, precision) * sqrt_interval(t, precision)
    value = (
        DyadicInterval.exact(MATVEEV_FACTOR * 30 ** (t + 3) * d**2, precision)
        * t_power
        * (log_interval(d, precision) + 1)
        * (log_interval(b, precision) + 1)
    )
    for height in inputs.A:
        value = value * height
    return value


def matveev_lower_bound(inputs: MatveevInputs, precision: int = 256) -> Fraction:
    """
    Certified lower bound on log |Lambda|.

    Returns the negated upper end of the magnitude enclosure, so the value is
    never optimistic.
    """
    return -matveev_magnitude(inputs, precision).hi
