"""Per-k audit combining family enumeration, exhaustive search and bounds."""

from typing import Any

from pydantic import BaseModel, Field

from .._base import DEFAULT_MODULUS, FamilyTag, SearchConfig, SearchMode, SolutionRecord
from .._bounds import BoundReport, bound_report
from .._search import family_enumerate, run_search, statement_form_audit
from .._utils import get_logger, log_warning

logger = get_logger(__name__)

Key = tuple[int, int, int, int, int]


class ReportEntry(BaseModel):
    """Audit of one k."""

    k: int = Field(description="Recursion order")
    n_max: int = Field(description="Largest n searched")
    family_instances: int = Field(description="Family instances with n <= n_max")
    solutions: int = Field(description="Solutions found by the search")
    nonzero_c: list[str] = Field(
        default_factory=list, description="Distinct nonzero c found, sorted"
    )
    sporadic: list[list[int]] = Field(
        default_factory=list, description="Found tuples matching no family"
    )
    outside_families: list[list[int]] = Field(
        default_factory=list, description="Found tuples no family instance produced"
    )
    families_not_found: list[list[int]] = Field(
        default_factory=list, description="Verified family instances the search missed"
    )
    unverified_families: list[list[int]] = Field(
        default_factory=list, description="Family instances that failed verification"
    )
    statement_forms_flagged: int = Field(
        default=0, description="Printed-form (iii) instances that fail verification"
    )
    bounds: BoundReport | None = Field(default=None, description="Baker bound summary")

    @property
    def discrepancies(self) -> int:
        return (
            len(self.sporadic)
            + len(self.outside_families)
            + len(self.families_not_found)
            + len(self.unverified_families)
        )

    def to_row(self) -> dict[str, Any]:
        row = self.model_dump(mode="json")
        row["discrepancies"] = self.discrepancies
        return row


class Report(BaseModel):
    """Audit of a range of k."""

    entries: list[ReportEntry] = Field(default_factory=list, description="One entry per k")

    @property
    def discrepancies(self) -> int:
        return sum(entry.discrepancies for entry in self.entries)

    @property
    def exit_code(self) -> int:
        return 1 if self.discrepancies else 0


def _keys(records: list[SolutionRecord]) -> list[list[int]]:
    return [list(record.key) for record in records]


def report_entry(
    k: int,
    n_max: int,
    mode: SearchMode = SearchMode.HASH,
    modulus: int = DEFAULT_MODULUS,
) -> ReportEntry:
    """
    Enumerate the families, search the box, and cross-check the two.

    Every found tuple must be a verified family instance and every verified
    family instance must be found.
    """
    instances = family_enumerate(k, n_max)
    found = run_search(
        SearchConfig(k_min=k, k_max=k, n_max=n_max, modulus=modulus, mode=mode)
    )

    verified: dict[Key, SolutionRecord] = {
        instance.record.key: instance.record for instance in instances if instance.verified
    }
    found_keys = {record.key for record in found}
    entry = ReportEntry(
        k=k,
        n_max=n_max,
        family_instances=len(instances),
        solutions=len(found),
        nonzero_c=[str(c) for c in sorted({record.c for record in found if record.c})],
        sporadic=_keys([record for record in found if record.family is FamilyTag.SPORADIC]),
        outside_families=_keys([record for record in found if record.key not in verified]),
        families_not_found=_keys(
            [record for key, record in sorted(verified.items()) if key not in found_keys]
        ),
        unverified_families=_keys(
            [instance.record for instance in instances if not instance.verified]
        ),
        statement_forms_flagged=sum(
            not instance.verified for instance in statement_form_audit(k)
        ),
        bounds=bound_report(k),
    )
    if entry.discrepancies:
        log_warning(
            "Report found discrepancies",
            k=k,
            sporadic=len(entry.sporadic),
            outside_families=len(entry.outside_families),
            families_not_found=len(entry.families_not_found),
            unverified_families=len(entry.unverified_families),
        )
    return entry


def build_report(config: SearchConfig) -> Report:
    """Report over every k of ``config``."""
    report = Report(
        entries=[
            report_entry(k, config.n_max, config.mode, config.modulus)
            for k in config.orders()
        ]
    )
    logger.info(
        "Report finished",
        k_min=config.k_min,
        k_max=config.k_max,
        n_max=config.n_max,
        discrepancies=report.discrepancies,
    )
    return report
