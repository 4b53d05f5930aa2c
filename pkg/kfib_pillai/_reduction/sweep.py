"""Reduction sweeps over the four linear forms, with resumable progress."""

from collections.abc import Iterable, Iterator
from fractions import Fraction
from functools import lru_cache
import math
import threading
from typing import Any, NamedTuple, Protocol

from pydantic import BaseModel, Field, field_serializer

from .._algebraic import (
    REDUCTION_POLICY,
    DyadicInterval,
    PrecisionPolicy,
    dominant_root,
    f_k_of,
    ln2_interval,
    log_interval,
    with_precision_ladder,
)
from .._base import CellStatus, ReductionCase
from .._bounds import final_n_bound
from .._core.exceptions import CacheError, KFibError
from .._hooks import EventHook, emit_event
from .._utils import create_cell_key, get_logger, log_error, log_sweep_cell, validate_order
from .continued_fraction import CFExpansion, cf_expand
from .dujella_petho import MAX_RETRIES, Q_FACTOR, ReductionInstance, dp_reduce, w_bound_for

logger = get_logger(__name__)

BRANCH_N_GAP = "n-n1"
BRANCH_M_GAP = "m-m1"
BRANCH_N = "n"

# w in the third form is 0.8 n, so n < (5/4) w
GAMMA3_N_FACTOR = Fraction(5, 4)


class Branch(NamedTuple):
    """One (A, B) pair of a case and the quantity its w bounds."""

    name: str
    A: Fraction
    base_is_alpha: bool


CASE_BRANCHES: dict[ReductionCase, tuple[Branch, ...]] = {
    ReductionCase.GAMMA: (
        Branch(BRANCH_N_GAP, Fraction(200), True),
        Branch(BRANCH_M_GAP, Fraction(8), False),
    ),
    ReductionCase.GAMMA1: (Branch(BRANCH_M_GAP, Fraction(8), False),),
    ReductionCase.GAMMA2: (Branch(BRANCH_N_GAP, Fraction(114), True),),
    # 114 is the constant quoted for the search; 2^6/log 2 is carried alongside
    ReductionCase.GAMMA3: (Branch(BRANCH_N, Fraction(114), False),),
}


class QuotientStore(Protocol):
    """Persistent store of the partial quotients of tau, keyed by k and precision."""

    def get_quotients(self, k: int, precision_bits: int) -> list[int] | None: ...

    def put_quotients(self, k: int, precision_bits: int, quotients: list[int]) -> None: ...


_quotient_store: QuotientStore | None = None


def set_quotient_store(store: QuotientStore | None) -> None:
    """Install the store reduction contexts read and extend."""
    global _quotient_store
    _quotient_store = store


def get_quotient_store() -> QuotientStore | None:
    return _quotient_store


class ReductionContext:
    """
    Per-(k, precision, M) data shared read-only by every cell of a sweep.

    tau, log f_k(alpha) and the expansion of tau are computed once; the
    logarithms of alpha^l - 1 and 2^j - 1 are memoized on first use.
    """

    def __init__(self, k: int, precision: int, M: int) -> None:  # noqa: N803
        self.k = k
        self.precision = precision
        self.M = M
        self.alpha = dominant_root(k, precision).alpha
        self.ln2 = ln2_interval(precision)
        self.log_f = log_interval(f_k_of(k, self.alpha), precision)
        self.tau = log_interval(self.alpha, precision) / self.ln2
        self.stated_gamma3_a = 64 / self.ln2
        self.expansion: CFExpansion = self._expand_tau(_quotient_store)
        self._alpha_gap_logs: dict[int, DyadicInterval] = {}
        self._mersenne_logs: dict[int, DyadicInterval] = {}
        self._lock = threading.RLock()

    def _expand_tau(self, store: QuotientStore | None) -> CFExpansion:
        known = store.get_quotients(self.k, self.precision) if store is not None else None
        expansion = cf_expand(self.tau, q_limit=Q_FACTOR * self.M, extra=MAX_RETRIES, known=known)
        if known is not None:
            emit_event(
                EventHook.QUOTIENT_CACHE_HIT,
                {"k": self.k, "precision_bits": self.precision, "quotients": len(known)},
            )
        if store is not None and len(expansion.quotients) > len(known or ()):
            store.put_quotients(self.k, self.precision, expansion.quotients)
        return expansion

    def _alpha_gap_log(self, l: int) -> DyadicInterval:  # noqa: E741
        with self._lock:
            if l not in self._alpha_gap_logs:
                self._alpha_gap_logs[l] = log_interval(self.alpha**l - 1, self.precision)
            return self._alpha_gap_logs[l]

    def _mersenne_log(self, j: int) -> DyadicInterval:
        with self._lock:
            if j not in self._mersenne_logs:
                self._mersenne_logs[j] = log_interval((1 << j) - 1, self.precision)
            return self._mersenne_logs[j]

    def mu(
        self,
        case: ReductionCase,
        l: int | None = None,  # noqa: E741
        j: int | None = None,
    ) -> DyadicInterval:
        """mu of the case, divided by log 2."""
        log_value = self.log_f
        if case in (ReductionCase.GAMMA1, ReductionCase.GAMMA3):
            log_value = log_value + self._alpha_gap_log(_require(l, "l", case))
        if case in (ReductionCase.GAMMA2, ReductionCase.GAMMA3):
            log_value = log_value - self._mersenne_log(_require(j, "j", case))
        return log_value / self.ln2

    def base(self, branch: Branch) -> DyadicInterval:
        return self.alpha if branch.base_is_alpha else DyadicInterval.exact(2, self.precision)

    def instance(
        self,
        case: ReductionCase,
        branch: Branch,
        l: int | None = None,  # noqa: E741
        j: int | None = None,
    ) -> ReductionInstance:
        return ReductionInstance(
            tau=self.tau,
            mu=self.mu(case, l, j),
            A=branch.A,
            B=self.base(branch),
            M=self.M,
        )


def _require(value: int | None, name: str, case: ReductionCase) -> int:
    if value is None or value < 1:
        raise ValueError(f"{case.value} needs {name} >= 1, got {value}")
    return value


@lru_cache(maxsize=16)
def reduction_context(k: int, precision: int, M: int) -> ReductionContext:  # noqa: N803
    """Shared context for one k at one precision."""
    return ReductionContext(k, precision, M)


class SweepCell(BaseModel):
    """Result of one (case, k, branch, l, j) reduction."""

    case: ReductionCase = Field(description="Linear form reduced")
    k: int = Field(description="Recursion order")
    branch: str = Field(description="Quantity bounded: n-n1, m-m1 or n")
    l: int | None = Field(default=None, description="n - n1, where the case fixes it")  # noqa: E741
    j: int | None = Field(default=None, description="m - m1, where the case fixes it")
    status: CellStatus = Field(description="Whether a positive epsilon was certified")
    q: int | None = Field(default=None, description="Convergent denominator used")
    epsilon_lo: float | None = Field(default=None, description="Lower end of epsilon")
    w_bound: int | None = Field(default=None, description="Binding w bound")
    w_bound_stated: int | None = Field(
        default=None, description="w bound with A = 2^6/log 2 (third form only)"
    )
    implied_bound: int | None = Field(
        default=None, description="Bound on the branch quantity implied by w_bound"
    )
    error: str | None = Field(default=None, description="Failure reason")

    model_config = {"frozen": True}

    @field_serializer("case")
    def _serialize_case(self, case: ReductionCase) -> str:
        return case.value

    @field_serializer("status")
    def _serialize_status(self, status: CellStatus) -> str:
        return status.value

    @field_serializer("q")
    def _serialize_q(self, q: int | None) -> str | None:
        return None if q is None else str(q)

    @property
    def key(self) -> str:
        return create_cell_key(self.case.value, self.k, self.branch, self.l, self.j)

    def to_row(self) -> dict[str, Any]:
        return self.model_dump(mode="json")


class SweepProgress(BaseModel):
    """Running state of a sweep, persisted after every cell for resumption."""

    case: ReductionCase = Field(description="Linear form being swept")
    k: int = Field(description="Recursion order")
    last_cell: str | None = Field(default=None, description="Key of the last finished cell")
    completed: int = Field(default=0, description="Cells finished so far")
    failed: int = Field(default=0, description="Cells that failed so far")
    maxima: dict[str, int] = Field(
        default_factory=dict, description="Largest implied bound per branch"
    )

    def record(self, cell: SweepCell) -> None:
        self.last_cell = cell.key
        self.completed += 1
        if cell.status is CellStatus.FAILED:
            self.failed += 1
        elif cell.implied_bound is not None:
            current = self.maxima.get(cell.branch)
            if current is None or cell.implied_bound > current:
                self.maxima[cell.branch] = cell.implied_bound


class CellSink(Protocol):
    """Receives every finished cell, in sweep order."""

    def write_row(self, row: dict[str, Any]) -> None: ...


class ProgressStore(Protocol):
    """Persists sweep progress so an interrupted sweep can resume."""

    def load_progress(self, case: ReductionCase, k: int) -> SweepProgress | None: ...

    def save_progress(self, progress: SweepProgress) -> None: ...


class SweepResult(BaseModel):
    """All cells of a sweep and the running maxima."""

    case: ReductionCase = Field(description="Linear form swept")
    k: int = Field(description="Recursion order")
    M: int = Field(description="Baker bound used for u")
    cells: list[SweepCell] = Field(
        default_factory=list, description="Cells computed in this run"
    )
    progress: SweepProgress = Field(description="Totals, including resumed cells")

    @property
    def failed_cells(self) -> list[SweepCell]:
        return [cell for cell in self.cells if cell.status is CellStatus.FAILED]

    @property
    def established(self) -> bool:
        """Every cell, including resumed ones, certified a bound."""
        return self.progress.failed == 0

    def maximum(self, branch: str | None = None) -> int | None:
        """Largest implied bound for a branch, or over all branches."""
        maxima = self.progress.maxima
        if branch is not None:
            return maxima.get(branch)
        return max(maxima.values(), default=None)


def _cell_coordinates(
    case: ReductionCase,
    l_range: Iterable[int] | None,
    j_range: Iterable[int] | None,
) -> Iterator[tuple[Branch, int | None, int | None]]:
    branches = CASE_BRANCHES[case]
    if case is ReductionCase.GAMMA:
        for branch in branches:
            yield branch, None, None
    elif case is ReductionCase.GAMMA1:
        for l in l_range or ():  # noqa: E741
            yield branches[0], l, None
    elif case is ReductionCase.GAMMA2:
        for j in j_range or ():
            yield branches[0], None, j
    else:
        js = list(j_range or ())
        for l in l_range or ():  # noqa: E741
            for j in js:
                yield branches[0], l, j


def _implied_bound(case: ReductionCase, w_bound: int) -> int:
    if case is ReductionCase.GAMMA3:
        return math.ceil(GAMMA3_N_FACTOR * w_bound)
    return w_bound


def _reduce_cell(
    context: ReductionContext,
    case: ReductionCase,
    branch: Branch,
    l: int | None,  # noqa: E741
    j: int | None,
) -> SweepCell:
    outcome = dp_reduce(context.instance(case, branch, l, j), context.expansion)
    w_bound = outcome.w_bound
    stated: int | None = None
    if case is ReductionCase.GAMMA3:
        stated = w_bound_for(context.stated_gamma3_a, 2, outcome.q_used, outcome.epsilon)
        w_bound = max(w_bound, stated)
    return SweepCell(
        case=case,
        k=context.k,
        branch=branch.name,
        l=l,
        j=j,
        status=CellStatus.OK,
        q=outcome.q_used,
        epsilon_lo=math.nextafter(float(outcome.epsilon.lo), 0.0),
        w_bound=w_bound,
        w_bound_stated=stated,
        implied_bound=_implied_bound(case, w_bound),
    )


def reduce_cell(
    case: ReductionCase,
    k: int,
    branch: Branch,
    l: int | None = None,  # noqa: E741
    j: int | None = None,
    M: int | None = None,  # noqa: N803
    policy: PrecisionPolicy = REDUCTION_POLICY,
) -> SweepCell:
    """
    Reduce a single cell, escalating precision as needed.

    Failures are returned as FAILED cells, never raised.
    """
    M = final_n_bound(k) if M is None else M  # noqa: N806
    try:
        cell = with_precision_ladder(
            lambda bits: _reduce_cell(reduction_context(k, bits, M), case, branch, l, j),
            policy,
            "reduction_sweep",
            k,
        )
    except KFibError as error:
        log_error("reduction_sweep", error, k=k, case=case.value, l=l, j=j)
        emit_event(
            EventHook.SWEEP_CELL_FAILED,
            {"case": case.value, "k": k, "l": l, "j": j, "error": str(error)},
        )
        return SweepCell(
            case=case,
            k=k,
            branch=branch.name,
            l=l,
            j=j,
            status=CellStatus.FAILED,
            error=str(error),
        )
    log_sweep_cell(case.value, k, l, j, cell.w_bound, cell.status.value, branch=branch.name)
    emit_event(
        EventHook.SWEEP_CELL_COMPLETED,
        {"case": case.value, "k": k, "l": l, "j": j, "w_bound": cell.w_bound},
    )
    return cell


def reduction_sweep(
    case: ReductionCase,
    k: int,
    l_range: Iterable[int] | None = None,
    j_range: Iterable[int] | None = None,
    M: int | None = None,  # noqa: N803
    policy: PrecisionPolicy = REDUCTION_POLICY,
    sink: CellSink | None = None,
    progress_store: ProgressStore | None = None,
) -> SweepResult:
    """
    Run the reduction over every cell of one case for one k.

    Cells are visited in a fixed order (branch, then l, then j). Failed
    cells are recorded and the sweep continues.

    Args:
        case: Linear form to reduce
        k: Recursion order, at least 4
        l_range: Values of n - n1 (first and third forms)
        j_range: Values of m - m1 (second and third forms)
        M: Bound on u, defaults to the final Baker bound for k
        policy: Precision ladder for every cell
        sink: Receives each finished cell as a flat row
        progress_store: When given, cells up to the stored cursor are
            skipped and progress is saved after every cell

    Returns:
        SweepResult with this run's cells and totals across resumptions

    Raises:
        CacheError: If the stored cursor names a cell that is not in this
            sweep's ranges
    """
    validate_order(k, minimum=4, operation="reduction_sweep")
    M = final_n_bound(k) if M is None else M  # noqa: N806
    progress = SweepProgress(case=case, k=k)
    resume_after: str | None = None
    if progress_store is not None:
        stored = progress_store.load_progress(case, k)
        if stored is not None:
            progress = stored
            resume_after = stored.last_cell
            logger.info(
                "Resuming sweep",
                case=case.value,
                k=k,
                after=resume_after,
                completed=stored.completed,
            )

    coordinates = list(_cell_coordinates(case, l_range, j_range))
    start = 0
    if resume_after is not None:
        keys = [create_cell_key(case.value, k, c[0].name, c[1], c[2]) for c in coordinates]
        if resume_after not in keys:
            path = getattr(progress_store, "path", None)
            raise CacheError(
                "Sweep cursor names a cell outside the requested ranges",
                path=None if path is None else str(path),
                details=f"last_cell={resume_after}",
            )
        start = keys.index(resume_after) + 1

    cells: list[SweepCell] = []
    for branch, l, j in coordinates[start:]:  # noqa: E741
        cell = reduce_cell(case, k, branch, l, j, M, policy)
        cells.append(cell)
        progress.record(cell)
        if sink is not None:
            sink.write_row(cell.to_row())
        if progress_store is not None:
            progress_store.save_progress(progress)

    logger.debug(
        "Sweep finished",
        case=case.value,
        k=k,
        cells=len(cells),
        failed=progress.failed,
        maxima=progress.maxima,
    )
    return SweepResult(case=case, k=k, M=M, cells=cells, progress=progress)


def clear_reduction_cache() -> None:
    """Forget shared reduction contexts."""
    reduction_context.cache_clear()
