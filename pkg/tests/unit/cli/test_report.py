"""Tests for the per-k audit."""

from kfib_pillai import SearchConfig, SearchMode
from kfib_pillai._cli import Report, ReportEntry, build_report, report_entry


class TestReportEntry:
    """Test the family/search cross-check."""

    def test_tetranacci(self) -> None:
        """k = 4 is clean and finds its five nonzero values."""
        entry = report_entry(4, 10)
        assert entry.discrepancies == 0
        assert entry.family_instances == entry.solutions == 11
        assert entry.nonzero_c == ["-8", "-3", "-1", "7", "13"]
        assert entry.statement_forms_flagged == 1
        assert entry.bounds is not None
        assert entry.bounds.cutoff_satisfied

    def test_naive_mode(self) -> None:
        """The naive search gives the same entry."""
        hashed = report_entry(5, 14)
        naive = report_entry(5, 14, mode=SearchMode.NAIVE)
        assert naive.model_dump() == hashed.model_dump()
        assert "-255" in naive.nonzero_c

    def test_discrepancies_counted(self) -> None:
        """Every mismatch list counts toward the exit code."""
        entry = ReportEntry(
            k=4,
            n_max=10,
            family_instances=0,
            solutions=1,
            sporadic=[[4, 9, 3, 8, 1]],
            outside_families=[[4, 9, 3, 8, 1]],
        )
        assert entry.discrepancies == 2
        assert entry.to_row()["discrepancies"] == 2
        assert Report(entries=[entry]).exit_code == 1


class TestBuildReport:
    """Test reports over several k."""

    def test_clean_range(self) -> None:
        """k = 4..6 has no discrepancies."""
        report = build_report(SearchConfig(k_min=4, k_max=6, n_max=18, mode=SearchMode.HASH))
        assert [entry.k for entry in report.entries] == [4, 5, 6]
        assert report.discrepancies == 0
        assert report.exit_code == 0
