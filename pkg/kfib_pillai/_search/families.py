"""Generators for the parametric solution families."""

from collections.abc import Iterator

from .._base import FamilyForm, FamilyInstance, FamilyTag, SolutionRecord
from .._core.exceptions import VerificationError
from .._hooks import EventHook, emit_event
from .._utils import get_logger, is_power_of_two, log_warning, validate_order
from .classify import ii_b_tuple, iii_tuple, iv_tuple, verify_solution

logger = get_logger(__name__)

Candidate = tuple[FamilyTag, FamilyForm, dict[str, int], tuple[int, int, int, int, int]]


def _family_i(k: int, n_max: int) -> Iterator[Candidate]:
    for s in range(3, min(k + 1, n_max) + 1):
        for t in range(2, s):
            yield FamilyTag.I, FamilyForm.DERIVED, {"s": s, "t": t}, (0, s, s - 2, t, t - 2)


def _family_ii_a(k: int, n_max: int) -> Iterator[Candidate]:
    if k + 2 <= n_max:
        yield (
            FamilyTag.II_A,
            FamilyForm.DERIVED,
            {},
            ((1 << (k - 1)) - 1, k + 2, k - 1, k + 1, 0),
        )


def _family_ii_b(k: int, n_max: int) -> Iterator[Candidate]:
    # gamma + 3 <= k + 2 forces 2^a - 2^b <= k + 2
    for a in range(1, (k + 2).bit_length() + 2):
        for b in range(a):
            if (a, b) == (1, 0):
                continue
            gap = (1 << a) - (1 << b)
            gamma, rho = b - 3 + gap, a - 3 + gap
            if gamma < 0 or rho < 0 or gamma + 3 > k + 2 or k + gap > n_max:
                continue
            yield FamilyTag.II_B, FamilyForm.DERIVED, {"a": a, "b": b}, ii_b_tuple(k, a, b)


def _family_iii(k: int, n_max: int) -> Iterator[Candidate]:
    t = 2
    while (1 << t) <= k + 3 and k + (1 << t) - 1 <= n_max:
        yield FamilyTag.III, FamilyForm.DERIVED, {"t": t}, iii_tuple(k, t)
        t += 1


def _family_iv(k: int, n_max: int) -> Iterator[Candidate]:
    if is_power_of_two(k + 3) and 2 * k + 3 <= n_max:
        t = (k + 3).bit_length() - 1
        if t >= 3:
            yield FamilyTag.IV, FamilyForm.DERIVED, {"t": t}, iv_tuple(t)


def _statement_iii(k: int) -> Iterator[Candidate]:
    """Family (iii) exactly as printed, with b = 0 admitted for the audit."""
    a = (k + 2).bit_length() - 1
    excess = a + (1 << a) - k - 1
    if not is_power_of_two(excess):
        return
    b = excess.bit_length() - 1
    yield (
        FamilyTag.III,
        FamilyForm.STATEMENT,
        {"a": a, "b": b},
        (
            -(1 << (a + (1 << a) - 3)),
            k + (1 << a),
            k + (1 << a) - 2,
            k + (1 << b),
            b + (1 << b) - 3,
        ),
    )


def _instantiate(k: int, candidate: Candidate) -> FamilyInstance:
    tag, form, parameters, (c, n, m, n1, m1) = candidate
    unverified = SolutionRecord(k=k, c=c, n=n, m=m, n1=n1, m1=m1, family=tag)
    try:
        record = verify_solution(k, n, m, n1, m1)
    except VerificationError as error:
        return _discrepancy(unverified, form, parameters, str(error))
    if record.family is not tag:
        return _discrepancy(
            unverified, form, parameters, f"classified as {record.family.value}"
        )
    return FamilyInstance(record=record, form=form, parameters=parameters)


def _discrepancy(
    record: SolutionRecord,
    form: FamilyForm,
    parameters: dict[str, int],
    reason: str,
) -> FamilyInstance:
    log_warning(
        "Family instance failed verification",
        k=record.k,
        family=record.family.value,
        form=form.value,
        parameters=parameters,
        reason=reason,
    )
    emit_event(
        EventHook.FAMILY_DISCREPANCY,
        {"record": record.to_row(), "form": form.value, "reason": reason},
    )
    return FamilyInstance(
        record=record,
        form=form,
        parameters=parameters,
        verified=False,
        discrepancy=reason,
    )


def family_enumerate(
    k: int,
    n_max: int,
    include_statement_forms: bool = False,
) -> list[FamilyInstance]:
    """
    Every family instance with n <= n_max, each exact-verified.

    Instances that fail verification are returned flagged rather than
    dropped. Family (iii) is generated in its operative form; its printed
    form is added only on request.

    Args:
        k: Recursion order, at least 4
        n_max: Largest n produced
        include_statement_forms: Also emit the printed form of family (iii)
    """
    validate_order(k, minimum=4, operation="family_enumerate")
    generators = [_family_i, _family_ii_a, _family_ii_b, _family_iii, _family_iv]
    instances = [
        _instantiate(k, candidate)
        for generator in generators
        for candidate in generator(k, n_max)
    ]
    if include_statement_forms:
        instances.extend(
            _instantiate(k, candidate)
            for candidate in _statement_iii(k)
            if candidate[3][1] <= n_max
        )
    instances.sort(key=lambda instance: instance.record.key)
    logger.debug(
        "Families enumerated",
        k=k,
        n_max=n_max,
        instances=len(instances),
        unverified=sum(not instance.verified for instance in instances),
    )
    return instances


def statement_form_audit(k: int) -> list[FamilyInstance]:
    """The printed form of family (iii) for this k, verified and flagged."""
    validate_order(k, minimum=4, operation="statement_form_audit")
    return [_instantiate(k, candidate) for candidate in _statement_iii(k)]
