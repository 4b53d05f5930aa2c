"""The full reduction chain for one k, ending with an absolute bound on n."""

from pydantic import BaseModel, Field

from .._algebraic import REDUCTION_POLICY, PrecisionPolicy
from .._base import ReductionCase
from .._bounds import final_n_bound
from .._utils import get_logger, log_info, validate_order
from .sweep import (
    BRANCH_M_GAP,
    BRANCH_N,
    BRANCH_N_GAP,
    CellSink,
    ProgressStore,
    SweepResult,
    reduction_sweep,
)

logger = get_logger(__name__)

# the linear forms of the second and third stage assume the other gap is at least this
DISPATCH_THRESHOLD = 20


class PipelineResult(BaseModel):
    """
    Bounds produced by each stage of the chain for one k.

    Gap bounds are inclusive: the gap never exceeds them.
    """

    k: int = Field(description="Recursion order")
    M: int = Field(description="Baker bound used for u")
    n_gap_from_gamma: int | None = Field(
        default=None, description="n - n1 bound from the first form, (200, alpha) branch"
    )
    m_gap_from_gamma: int | None = Field(
        default=None, description="m - m1 bound from the first form, (8, 2) branch"
    )
    m_gap_from_gamma1: int | None = Field(
        default=None, description="m - m1 bound when n - n1 is small"
    )
    n_gap_from_gamma2: int | None = Field(
        default=None, description="n - n1 bound when m - m1 is small"
    )
    l_max: int | None = Field(default=None, description="n - n1 range used in the last form")
    j_max: int | None = Field(default=None, description="m - m1 range used in the last form")
    w_bound_gamma3: int | None = Field(default=None, description="Binding w bound of the last form")
    w_bound_gamma3_stated: int | None = Field(
        default=None, description="The same with A = 2^6/log 2"
    )
    n_bound: int | None = Field(default=None, description="Bound on n, where established")
    failed_cells: int = Field(default=0, description="Cells without a certified bound")
    capped: bool = Field(default=False, description="Some range was truncated by a cap")
    dispatch: dict[str, str] = Field(
        default_factory=dict, description="Which stage produced each bound"
    )

    @property
    def established(self) -> bool:
        """The bound covers every cell the argument requires."""
        return self.failed_cells == 0 and not self.capped and self.n_bound is not None


class ReductionBound(BaseModel):
    """Outcome of the reduction for one k."""

    k: int = Field(description="Recursion order")
    n_bound: int | None = Field(default=None, description="Bound on n from the last form")
    established: bool = Field(description="Whether the bound covers the full ranges")
    reason: str | None = Field(default=None, description="Why it is not established")


def _gap_bound(result: SweepResult, branch: str) -> int | None:
    if not result.established:
        return None
    value = result.maximum(branch)
    return None if value is None else max(value, DISPATCH_THRESHOLD)


def _capped(bound: int, cap: int | None) -> tuple[int, bool]:
    if cap is not None and cap < bound:
        return cap, True
    return bound, False


def reduction_pipeline(
    k: int,
    l_cap: int | None = None,
    j_cap: int | None = None,
    M: int | None = None,  # noqa: N803
    policy: PrecisionPolicy = REDUCTION_POLICY,
    sink: CellSink | None = None,
    progress_store: ProgressStore | None = None,
) -> PipelineResult:
    """
    Run the four reductions in order for one k.

    The first form bounds either n - n1 or m - m1. If n - n1 is the small
    gap, the second form over l = n - n1 bounds m - m1; if m - m1 is the
    small gap, the third form over j = m - m1 bounds n - n1. Either way both
    gaps end up bounded, and the last form over the (l, j) box bounds n.

    Args:
        k: Recursion order, at least 4
        l_cap: Optional cap on n - n1 for desk-scale runs
        j_cap: Optional cap on m - m1 for desk-scale runs
        M: Bound on u, defaults to the final Baker bound
        policy: Precision ladder for every cell
        sink: Receives every finished cell
        progress_store: Cursor store for resumable sweeps
    """
    validate_order(k, minimum=4, operation="reduction_pipeline")
    M = final_n_bound(k) if M is None else M  # noqa: N806
    result = PipelineResult(k=k, M=M)

    def sweep(case: ReductionCase, **ranges: range) -> SweepResult:
        outcome = reduction_sweep(
            case, k, M=M, policy=policy, sink=sink, progress_store=progress_store, **ranges
        )
        result.failed_cells += outcome.progress.failed
        return outcome

    gamma = sweep(ReductionCase.GAMMA)
    result.n_gap_from_gamma = _gap_bound(gamma, BRANCH_N_GAP)
    result.m_gap_from_gamma = _gap_bound(gamma, BRANCH_M_GAP)
    if result.n_gap_from_gamma is None or result.m_gap_from_gamma is None:
        return result

    l_small, l_small_capped = _capped(result.n_gap_from_gamma, l_cap)
    gamma1 = sweep(ReductionCase.GAMMA1, l_range=range(1, l_small + 1))
    result.m_gap_from_gamma1 = _gap_bound(gamma1, BRANCH_M_GAP)

    j_small, j_small_capped = _capped(result.m_gap_from_gamma, j_cap)
    gamma2 = sweep(ReductionCase.GAMMA2, j_range=range(1, j_small + 1))
    result.n_gap_from_gamma2 = _gap_bound(gamma2, BRANCH_N_GAP)
    if result.m_gap_from_gamma1 is None or result.n_gap_from_gamma2 is None:
        result.capped = l_small_capped or j_small_capped
        return result

    # n - n1 is either the small gap (first form) or bounded by the third form
    l_bound = max(result.n_gap_from_gamma, result.n_gap_from_gamma2)
    j_bound = max(result.m_gap_from_gamma, result.m_gap_from_gamma1)
    result.dispatch = {
        "n-n1": "gamma" if l_bound == result.n_gap_from_gamma else "gamma2",
        "m-m1": "gamma" if j_bound == result.m_gap_from_gamma else "gamma1",
    }
    result.l_max, l_capped = _capped(l_bound, l_cap)
    result.j_max, j_capped = _capped(j_bound, j_cap)
    result.capped = l_small_capped or j_small_capped or l_capped or j_capped

    gamma3 = sweep(
        ReductionCase.GAMMA3,
        l_range=range(1, result.l_max + 1),
        j_range=range(1, result.j_max + 1),
    )
    if gamma3.established:
        result.n_bound = gamma3.maximum(BRANCH_N)
        ok_cells = [cell for cell in gamma3.cells if cell.w_bound is not None]
        result.w_bound_gamma3 = max((cell.w_bound or 0 for cell in ok_cells), default=None)
        result.w_bound_gamma3_stated = max(
            (cell.w_bound_stated or 0 for cell in ok_cells), default=None
        )
        result.dispatch["n"] = "gamma3"
    log_info(
        "Reduction pipeline finished",
        k=k,
        n_bound=result.n_bound,
        failed_cells=result.failed_cells,
        capped=result.capped,
    )
    return result


def final_n_bound_after_reduction(
    k: int,
    pipeline: PipelineResult | None = None,
    l_cap: int | None = None,
    j_cap: int | None = None,
    policy: PrecisionPolicy = REDUCTION_POLICY,
) -> ReductionBound:
    """
    Bound on n for this k after the last reduction.

    A pipeline with failed cells gives no bound; a capped pipeline gives a
    bound that is reported but not established.
    """
    if pipeline is None:
        pipeline = reduction_pipeline(k, l_cap=l_cap, j_cap=j_cap, policy=policy)
    if pipeline.failed_cells:
        return ReductionBound(
            k=k,
            established=False,
            reason=f"{pipeline.failed_cells} sweep cells failed",
        )
    if pipeline.n_bound is None:
        return ReductionBound(k=k, established=False, reason="last form was not reached")
    if pipeline.capped:
        return ReductionBound(
            k=k,
            n_bound=pipeline.n_bound,
            established=False,
            reason=f"ranges capped at l <= {pipeline.l_max}, j <= {pipeline.j_max}",
        )
    return ReductionBound(k=k, n_bound=pipeline.n_bound, established=True)
