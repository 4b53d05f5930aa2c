"""Text cache of dominant roots and continued-fraction quotients."""

from pathlib import Path
from threading import RLock

from .._algebraic import DominantRoot, DyadicInterval
from .._core.exceptions import CacheError
from .._utils import get_logger

logger = get_logger(__name__)

CACHE_HEADER = "KFIBCACHE v1"


def format_dyadic(mantissa: int, exponent: int) -> str:
    """``mantissa * 2^exponent`` as ``<hex mantissa>p<exponent>``."""
    sign = "-" if mantissa < 0 else ""
    return f"{sign}{abs(mantissa):x}p{exponent}"


def parse_dyadic(token: str) -> tuple[int, int]:
    """Inverse of :func:`format_dyadic`."""
    mantissa, separator, exponent = token.partition("p")
    if not separator:
        raise ValueError(f"missing 'p' in {token!r}")
    return int(mantissa, 16), int(exponent)


class RootCache:
    """
    Line-oriented cache file, loaded on construction and saved on demand.

    ``root <k> <precision_bits> <interval precision> <lo> <hi>`` stores an
    enclosure of alpha(k); ``cf <k> <precision_bits> <a0,a1,...>`` stores
    continued-fraction quotients of log alpha / log 2. Entries are written in
    sorted order so the file is deterministic.
    """

    def __init__(self, path: Path) -> None:
        self.path = path
        self._roots: dict[tuple[int, int], DominantRoot] = {}
        self._quotients: dict[tuple[int, int], list[int]] = {}
        self._dirty = False
        self._lock = RLock()
        if path.exists():
            self.load()

    def load(self) -> None:
        """
        Read the cache file.

        Raises:
            CacheError: On a missing or unknown header, or a malformed line
        """
        with self._lock:
            lines = self.path.read_text(encoding="utf-8").splitlines()
            if not lines or lines[0].strip() != CACHE_HEADER:
                found = lines[0].strip() if lines else ""
                raise CacheError(
                    "Unsupported cache version",
                    path=str(self.path),
                    line_number=1,
                    details=f"expected {CACHE_HEADER!r}, found {found!r}",
                )
            for line_number, line in enumerate(lines[1:], start=2):
                if line.strip():
                    self._parse_line(line, line_number)
            self._dirty = False
        logger.debug(
            "Cache loaded",
            path=str(self.path),
            roots=len(self._roots),
            expansions=len(self._quotients),
        )

    def _parse_line(self, line: str, line_number: int) -> None:
        fields = line.split()
        try:
            if fields[0] == "root" and len(fields) == 6:
                k, bits, precision = int(fields[1]), int(fields[2]), int(fields[3])
                alpha = DyadicInterval.from_mantissas(
                    parse_dyadic(fields[4]), parse_dyadic(fields[5]), precision
                )
                self._roots[(k, bits)] = DominantRoot(k=k, alpha=alpha, precision_bits=bits)
            elif fields[0] == "cf" and len(fields) == 4:
                key = (int(fields[1]), int(fields[2]))
                self._quotients[key] = [int(value) for value in fields[3].split(",")]
            else:
                raise ValueError(f"unrecognized entry {fields[0]!r}")
        except (ValueError, IndexError) as error:
            raise CacheError(
                "Corrupt cache entry",
                path=str(self.path),
                line_number=line_number,
                details=str(error),
            ) from error

    def save(self) -> None:
        """Write every entry, replacing the file atomically."""
        with self._lock:
            lines = [CACHE_HEADER]
            for (k, bits), root in sorted(self._roots.items()):
                lo, hi = root.alpha.mantissas()
                lines.append(
                    f"root {k} {bits} {root.alpha.precision} "
                    f"{format_dyadic(*lo)} {format_dyadic(*hi)}"
                )
            for (k, bits), quotients in sorted(self._quotients.items()):
                lines.append(f"cf {k} {bits} {','.join(map(str, quotients))}")
            self.path.parent.mkdir(parents=True, exist_ok=True)
            temporary = self.path.with_name(self.path.name + ".tmp")
            temporary.write_text("\n".join(lines) + "\n", encoding="utf-8")
            temporary.replace(self.path)
            self._dirty = False
        logger.debug("Cache saved", path=str(self.path), roots=len(self._roots))

    def flush(self) -> None:
        """Save only if something changed since the last load or save."""
        if self._dirty:
            self.save()

    # RootStore

    def get_root(self, k: int, precision_bits: int) -> DominantRoot | None:
        """The stored root of at least the requested precision, preferring the closest."""
        with self._lock:
            exact = self._roots.get((k, precision_bits))
            if exact is not None:
                return exact
            candidates = [
                bits for (order, bits) in self._roots if order == k and bits >= precision_bits
            ]
            return self._roots[(k, min(candidates))] if candidates else None

    def put_root(self, root: DominantRoot) -> None:
        with self._lock:
            self._roots[(root.k, root.precision_bits)] = root
            self._dirty = True

    # Continued fractions

    def get_quotients(self, k: int, precision_bits: int) -> list[int] | None:
        with self._lock:
            quotients = self._quotients.get((k, precision_bits))
            return list(quotients) if quotients is not None else None

    def put_quotients(self, k: int, precision_bits: int, quotients: list[int]) -> None:
        with self._lock:
            self._quotients[(k, precision_bits)] = list(quotients)
            self._dirty = True

    def __len__(self) -> int:
        return len(self._roots) + len(self._quotients)


def cache_roundtrip(path: Path) -> RootCache:
    """
    Load the cache at ``path``, write it back, and load it again.

    Returns:
        The reloaded cache, whose entries are bit-identical to the originals

    Raises:
        CacheError: If the file is corrupt or carries another version
    """
    cache = RootCache(path)
    cache.save()
    return RootCache(path)
