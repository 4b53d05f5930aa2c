"""Core enumerations for the toolkit."""

from enum import Enum


class FamilyTag(Enum):
    """
    Classification of a solution tuple (k, c, n, m, n1, m1).

    The values are the labels used in every JSON and CSV output.
    """

    # c = 0, both sides powers of two
    I = "i"  # noqa: E741
    II_A = "ii-a"  # c = 2^(k-1) - 1
    II_B = "ii-b"  # two-parameter family in (a, b)
    III = "iii"  # one-parameter family in t
    IV = "iv"  # only for k = 2^t - 3
    SPORADIC = "sporadic"  # matches no family


class FamilyForm(Enum):
    """Which parametrization of a family produced an instance."""

    DERIVED = "derived"  # operative form, verified by construction
    STATEMENT = "statement"  # family (iii) in its printed closed form


class ReductionCase(Enum):
    """
    The four linear forms reduced by the continued-fraction sweep.

    Each case fixes how mu is built and which (A, B) pairs apply.
    """

    GAMMA = "gamma"  # mu = log f / log 2
    GAMMA1 = "gamma1"  # mu = log(f (alpha^l - 1)) / log 2
    GAMMA2 = "gamma2"  # mu = log(f (2^j - 1)) / log 2
    GAMMA3 = "gamma3"  # mu = log(f (alpha^l - 1) / (2^j - 1)) / log 2


class SearchMode(Enum):
    """Search strategy over the (n, m, n1, m1) box."""

    NAIVE = "naive"  # exact double loop
    HASH = "hash"  # residue intersection plus exact re-verification


class CellStatus(Enum):
    """Outcome of one reduction-sweep cell."""

    OK = "ok"
    FAILED = "failed"


class OutputFormat(Enum):
    """Serialization for record streams."""

    JSON = "json"  # one JSON object per line
    CSV = "csv"
