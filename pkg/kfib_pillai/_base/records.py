"""Shared record and configuration models."""

from typing import Any

from pydantic import BaseModel, Field, field_serializer, model_validator

from .enums import FamilyForm, FamilyTag, SearchMode

DEFAULT_MODULUS = 10**20

RECORD_COLUMNS = ("k", "c", "n", "m", "n1", "m1", "family")


class SolutionRecord(BaseModel):
    """
    One tuple (k, c, n, m, n1, m1) with F_n - 2^m = F_n1 - 2^m1 = c.

    The ordering and exactness invariants are established by
    ``verify_solution``; the model itself only carries the data so that
    unverified family instances can be reported alongside verified ones.
    """

    k: int = Field(description="Recursion order")
    c: int = Field(description="Common value of both differences")
    n: int = Field(description="Larger sequence index")
    m: int = Field(description="Larger power-of-two exponent")
    n1: int = Field(description="Smaller sequence index")
    m1: int = Field(description="Smaller power-of-two exponent")
    family: FamilyTag = Field(
        default=FamilyTag.SPORADIC, description="Family classification"
    )

    model_config = {"frozen": True}

    @field_serializer("c")
    def _serialize_c(self, c: int) -> str:
        return str(c)

    @field_serializer("family")
    def _serialize_family(self, family: FamilyTag) -> str:
        return family.value

    @property
    def key(self) -> tuple[int, int, int, int, int]:
        """Identity of the tuple, independent of classification."""
        return (self.k, self.n, self.m, self.n1, self.m1)

    def to_row(self) -> dict[str, Any]:
        """Flat row with c as a decimal string, in output column order."""
        return self.model_dump(mode="json")


class FamilyInstance(BaseModel):
    """A parametric family instance together with its verification outcome."""

    record: SolutionRecord = Field(description="The instantiated tuple")
    form: FamilyForm = Field(
        default=FamilyForm.DERIVED, description="Parametrization that produced it"
    )
    parameters: dict[str, int] = Field(
        default_factory=dict, description="Family parameters such as a, b, s, t"
    )
    verified: bool = Field(default=True, description="Exact verification passed")
    discrepancy: str | None = Field(
        default=None, description="Why verification failed, if it did"
    )

    def to_row(self) -> dict[str, Any]:
        """Record row extended with the verification flag."""
        row = self.record.to_row()
        row["form"] = self.form.value
        row["verified"] = self.verified
        if self.discrepancy is not None:
            row["discrepancy"] = self.discrepancy
        return row


class SearchConfig(BaseModel):
    """
    Configuration for exhaustive searches.

    Validated eagerly so that invalid ranges are rejected before any work.
    """

    k_min: int = Field(ge=2, description="Smallest recursion order searched")
    k_max: int = Field(ge=2, description="Largest recursion order searched")
    n_max: int = Field(description="Largest sequence index searched")
    modulus: int = Field(
        default=DEFAULT_MODULUS, ge=2, description="Residue modulus for hash mode"
    )
    mode: SearchMode = Field(default=SearchMode.NAIVE, description="Search strategy")
    check_invariants: bool = Field(
        default=True, description="Assert case-analysis properties on found tuples"
    )

    @model_validator(mode="after")
    def _check_ranges(self) -> "SearchConfig":
        if self.k_max < self.k_min:
            raise ValueError(f"k_max={self.k_max} is below k_min={self.k_min}")
        if self.n_max < self.k_max + 2:
            raise ValueError(
                f"n_max={self.n_max} must be at least k_max + 2 = {self.k_max + 2}"
            )
        return self

    def orders(self) -> range:
        """Recursion orders covered by this configuration."""
        return range(self.k_min, self.k_max + 1)

    def for_order(self, k: int) -> "SearchConfig":
        """Single-order copy of this configuration."""
        return self.model_copy(update={"k_min": k, "k_max": k})
