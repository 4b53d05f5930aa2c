"""Base enumerations and shared records."""

from .enums import (
    CellStatus,
    FamilyForm,
    FamilyTag,
    OutputFormat,
    ReductionCase,
    SearchMode,
)
from .records import (
    DEFAULT_MODULUS,
    RECORD_COLUMNS,
    FamilyInstance,
    SearchConfig,
    SolutionRecord,
)

__all__ = [
    "CellStatus",
    "DEFAULT_MODULUS",
    "FamilyForm",
    "FamilyInstance",
    "FamilyTag",
    "OutputFormat",
    "RECORD_COLUMNS",
    "ReductionCase",
    "SearchConfig",
    "SearchMode",
    "SolutionRecord",
]
