"""Command-line front end, run configuration, result files and the root cache."""

from .cache import CACHE_HEADER, RootCache, cache_roundtrip, format_dyadic, parse_dyadic
from .config import CACHE_DIR_ENV, COMMANDS, RunConfig
from .container import ToolkitContainer, build_container
from .main import build_parser, execute, main, parse_config, run_command
from .output import ResultWriter, SweepCursor
from .report import Report, ReportEntry, build_report, report_entry

__all__ = [
    # Configuration
    "CACHE_DIR_ENV",
    "COMMANDS",
    "RunConfig",
    # Cache
    "CACHE_HEADER",
    "RootCache",
    "cache_roundtrip",
    "format_dyadic",
    "parse_dyadic",
    # Output
    "ResultWriter",
    "SweepCursor",
    # Wiring
    "ToolkitContainer",
    "build_container",
    # Report
    "Report",
    "ReportEntry",
    "build_report",
    "report_entry",
    # Entry points
    "build_parser",
    "execute",
    "main",
    "parse_config",
    "run_command",
]
