"""Command-line front end: ``kfib-pillai <command> [flags]``."""

import argparse
from collections.abc import Callable, Sequence
import logging
import sys

from pydantic import ValidationError

from .._algebraic import (
    REDUCTION_POLICY,
    PrecisionPolicy,
    dominant_root,
    f_k_value,
    log2_ratio,
    set_root_store,
)
from .._base import FamilyForm, FamilyTag, OutputFormat, ReductionCase, SearchMode
from .._bounds import bound_report, cutoff_k, hypothesis_cutoff_k
from .._core.exceptions import ConfigurationError, KFibError, ReductionError
from .._hooks import EventHook, emit_event
from .._reduction import (
    BRANCH_M_GAP,
    BRANCH_N_GAP,
    DISPATCH_THRESHOLD,
    final_n_bound_after_reduction,
    reduction_pipeline,
    reduction_sweep,
    set_quotient_store,
)
from .._search import family_enumerate, run_search
from .._sequence import kfib_term
from .._utils import configure_logging, filter_none_values, get_logger, log_error, log_info
from .cache import format_dyadic
from .config import COMMANDS, RunConfig
from .container import ToolkitContainer, build_container
from .report import build_report

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_DISCREPANCY = 1
EXIT_USAGE = 2
EXIT_FAILURE = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kfib-pillai",
        description="Certified computations for F_n - 2^m = F_n1 - 2^m1.",
    )
    parser.add_argument("command", choices=COMMANDS, help="What to compute")
    parser.add_argument("--k", type=int, help="Recursion order")
    parser.add_argument("--n", type=int, help="Sequence index (fib)")
    parser.add_argument("--bits", type=int, help="Precision in bits")
    parser.add_argument("--k-min", type=int, help="Smallest order (search, report)")
    parser.add_argument("--k-max", type=int, help="Largest order (search, report)")
    parser.add_argument("--n-max", type=int, help="Largest n (families, search, report)")
    parser.add_argument(
        "--mode", choices=[mode.value for mode in SearchMode], default=SearchMode.NAIVE.value
    )
    parser.add_argument("--modulus", type=int, help="Residue modulus for hash search")
    parser.add_argument("--case", choices=[case.value for case in ReductionCase])
    parser.add_argument("--l-max", type=int, help="Largest n - n1 swept (reduce)")
    parser.add_argument("--j-max", type=int, help="Largest m - m1 swept (reduce)")
    parser.add_argument(
        "--resume", action="store_true", help="Continue an interrupted reduce from its cursor"
    )
    parser.add_argument(
        "--include-statement-forms",
        action="store_true",
        help="Also emit family (iii) as printed (families)",
    )
    parser.add_argument("--out", help="Output file, stdout when absent")
    parser.add_argument(
        "--format", choices=[fmt.value for fmt in OutputFormat], default=OutputFormat.JSON.value
    )
    parser.add_argument("--cache-dir", help="Root cache directory, overrides $KFIB_CACHE_DIR")
    parser.add_argument("--verbose", action="store_true", help="Debug logging on stderr")
    return parser


def parse_config(argv: Sequence[str]) -> RunConfig:
    """
    Parse and validate a command line.

    Raises:
        SystemExit: On argparse errors
        ValidationError: On invalid flag combinations
    """
    namespace = build_parser().parse_args(list(argv))
    return RunConfig.model_validate(filter_none_values(vars(namespace)))


# Commands


def _run_fib(config: RunConfig, container: ToolkitContainer) -> int:
    assert config.k is not None and config.n is not None
    value = kfib_term(config.k, config.n)
    if config.out is None:
        print(value)
    else:
        container.result_writer().write_row({"k": config.k, "n": config.n, "value": str(value)})
    return EXIT_OK


def _run_root(config: RunConfig, container: ToolkitContainer) -> int:
    assert config.k is not None
    bits = config.precision_bits
    root = dominant_root(config.k, bits)
    lo, hi = root.alpha.mantissas()
    f_value = f_k_value(config.k, bits)
    container.result_writer().write_row(
        {
            "k": config.k,
            "precision_bits": bits,
            "alpha_lo": format_dyadic(*lo),
            "alpha_hi": format_dyadic(*hi),
            "alpha": repr(float(root.alpha.midpoint)),
            "f_k": repr(float(f_value.midpoint)),
            "tau": repr(float(log2_ratio(root.alpha).midpoint)),
        }
    )
    return EXIT_OK


def _run_families(config: RunConfig, container: ToolkitContainer) -> int:
    assert config.k is not None and config.n_max is not None
    instances = family_enumerate(config.k, config.n_max, config.include_statement_forms)
    container.result_writer().write_rows([instance.to_row() for instance in instances])
    # the printed form of (iii) is expected to fail and is only flagged
    failed = [
        instance
        for instance in instances
        if not instance.verified and instance.form is FamilyForm.DERIVED
    ]
    return EXIT_DISCREPANCY if failed else EXIT_OK


def _run_search(config: RunConfig, container: ToolkitContainer) -> int:
    records = run_search(config.search_config())
    container.result_writer().write_rows([record.to_row() for record in records])
    sporadic = [record for record in records if record.family is FamilyTag.SPORADIC]
    return EXIT_DISCREPANCY if sporadic else EXIT_OK


def _run_bounds(config: RunConfig, container: ToolkitContainer) -> int:
    assert config.k is not None
    row = bound_report(config.k).model_dump(mode="json")
    row["cutoff_k"] = cutoff_k()
    row["hypothesis_cutoff_k"] = hypothesis_cutoff_k()
    container.result_writer().write_row(row)
    return EXIT_OK


def _gap_from_gamma(k: int, branch: str, policy: PrecisionPolicy) -> int:
    gamma = reduction_sweep(ReductionCase.GAMMA, k, policy=policy)
    bound = gamma.maximum(branch)
    if not gamma.established or bound is None:
        raise ReductionError(
            "First form gave no gap bound to sweep over",
            details=f"branch={branch}",
            k=k,
            operation="reduce",
        )
    return max(bound, DISPATCH_THRESHOLD)


def _run_reduce(config: RunConfig, container: ToolkitContainer) -> int:
    assert config.k is not None and config.case is not None
    k, case = config.k, config.case
    policy = REDUCTION_POLICY.model_copy(update={"start_bits": config.precision_bits})
    writer = container.result_writer()
    cursor = container.sweep_cursor()

    if case is ReductionCase.GAMMA3 and (config.l_max is None or config.j_max is None):
        pipeline = reduction_pipeline(
            k,
            l_cap=config.l_max,
            j_cap=config.j_max,
            policy=policy,
            sink=writer,
            progress_store=cursor,
        )
        outcome = final_n_bound_after_reduction(k, pipeline)
        log_info(
            "Reduction finished",
            k=k,
            n_bound=outcome.n_bound,
            established=outcome.established,
            reason=outcome.reason,
        )
        established = pipeline.failed_cells == 0 and pipeline.n_bound is not None
    else:
        l_max = config.l_max
        j_max = config.j_max
        if case is ReductionCase.GAMMA1 and l_max is None:
            l_max = _gap_from_gamma(k, BRANCH_N_GAP, policy)
        if case is ReductionCase.GAMMA2 and j_max is None:
            j_max = _gap_from_gamma(k, BRANCH_M_GAP, policy)
        result = reduction_sweep(
            case,
            k,
            l_range=range(1, l_max + 1) if l_max else None,
            j_range=range(1, j_max + 1) if j_max else None,
            policy=policy,
            sink=writer,
            progress_store=cursor,
        )
        log_info(
            "Reduction finished",
            k=k,
            case=case.value,
            cells=result.progress.completed,
            failed=result.progress.failed,
            maxima=result.progress.maxima,
        )
        established = result.established
    return EXIT_OK if established else EXIT_FAILURE


def _run_report(config: RunConfig, container: ToolkitContainer) -> int:
    report = build_report(config.search_config())
    container.result_writer().write_rows([entry.to_row() for entry in report.entries])
    return report.exit_code


HANDLERS: dict[str, Callable[[RunConfig, ToolkitContainer], int]] = {
    "fib": _run_fib,
    "root": _run_root,
    "families": _run_families,
    "search": _run_search,
    "bounds": _run_bounds,
    "reduce": _run_reduce,
    "report": _run_report,
}


def execute(config: RunConfig, container: ToolkitContainer | None = None) -> int:
    """
    Run a validated configuration.

    The root cache, when configured, is installed as the default root and
    quotient store for the duration of the command and saved afterwards.

    Raises:
        KFibError: On computation failures
    """
    container = container or build_container(config)
    cache = container.root_cache()
    set_root_store(cache)
    set_quotient_store(cache)
    try:
        return HANDLERS[config.command](config, container)
    finally:
        set_root_store(None)
        set_quotient_store(None)
        container.result_writer().close()
        if cache is not None:
            cache.flush()


def run_command(argv: Sequence[str]) -> int:
    """
    Parse ``argv``, run the command and map the outcome to an exit code.

    Returns:
        0 on success, 1 when a verification discrepancy was found, 2 on a
        usage error, 3 when a computation failed
    """
    try:
        config = parse_config(argv)
    except SystemExit as exit_error:
        return EXIT_OK if exit_error.code == 0 else EXIT_USAGE
    except ValidationError as error:
        messages = "; ".join(str(detail["msg"]) for detail in error.errors())
        print(f"kfib-pillai: error: {messages}", file=sys.stderr)
        return EXIT_USAGE

    configure_logging(logging.DEBUG if config.verbose else logging.WARNING)
    try:
        return execute(config)
    except ConfigurationError as error:
        print(f"kfib-pillai: error: {error}", file=sys.stderr)
        return EXIT_USAGE
    except KFibError as error:
        log_error(config.command, error, k=error.k)
        emit_event(
            EventHook.ERROR_OCCURRED,
            {"command": config.command, "k": error.k, "error": type(error).__name__},
        )
        print(f"kfib-pillai: {error}", file=sys.stderr)
        return EXIT_FAILURE


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
