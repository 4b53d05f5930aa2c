"""Validated run configuration for the command-line front end."""

import os
from pathlib import Path

from pydantic import BaseModel, Field, model_validator

from .._base import DEFAULT_MODULUS, OutputFormat, ReductionCase, SearchConfig, SearchMode

CACHE_DIR_ENV = "KFIB_CACHE_DIR"
CACHE_FILE_NAME = "kfib.cache"
CURSOR_SUFFIX = ".cursor"
DEFAULT_BITS = 256
DEFAULT_REDUCTION_BITS = 2200

COMMANDS = ("fib", "root", "families", "search", "bounds", "reduce", "report")


def _cache_dir_from_env() -> Path | None:
    value = os.environ.get(CACHE_DIR_ENV)
    return Path(value) if value else None


class RunConfig(BaseModel):
    """
    Flags of one invocation, checked before any computation starts.

    Fields a command does not use are ignored; fields it needs are enforced
    by the validator.
    """

    command: str = Field(description="Subcommand to run")
    k: int | None = Field(default=None, ge=2, description="Recursion order")
    n: int | None = Field(default=None, description="Sequence index for fib")
    bits: int | None = Field(default=None, ge=16, description="Precision in bits")
    k_min: int | None = Field(default=None, ge=2, description="Smallest order of a range")
    k_max: int | None = Field(default=None, ge=2, description="Largest order of a range")
    n_max: int | None = Field(default=None, ge=3, description="Largest n searched")
    mode: SearchMode = Field(default=SearchMode.NAIVE, description="Search strategy")
    modulus: int = Field(default=DEFAULT_MODULUS, ge=2, description="Residue modulus")
    case: ReductionCase | None = Field(default=None, description="Linear form to reduce")
    l_max: int | None = Field(default=None, ge=1, description="Largest n - n1 swept")
    j_max: int | None = Field(default=None, ge=1, description="Largest m - m1 swept")
    resume: bool = Field(default=False, description="Continue a sweep from its cursor")
    include_statement_forms: bool = Field(
        default=False, description="Also emit the printed form of family (iii)"
    )
    out: Path | None = Field(default=None, description="Output file, stdout when absent")
    format: OutputFormat = Field(default=OutputFormat.JSON, description="Output format")
    cache_dir: Path | None = Field(
        default_factory=_cache_dir_from_env,
        description=f"Directory of the root cache, defaults to ${CACHE_DIR_ENV}",
    )
    verbose: bool = Field(default=False, description="Debug logging on stderr")

    @model_validator(mode="after")
    def _check_command(self) -> "RunConfig":
        required: dict[str, tuple[str, ...]] = {
            "fib": ("k", "n"),
            "root": ("k",),
            "families": ("k", "n_max"),
            "search": ("k_min", "k_max", "n_max"),
            "bounds": ("k",),
            "reduce": ("case", "k"),
            "report": ("k_min", "k_max", "n_max"),
        }
        if self.command not in required:
            raise ValueError(f"unknown command {self.command!r}")
        missing = [name for name in required[self.command] if getattr(self, name) is None]
        if missing:
            flags = ", ".join("--" + name.replace("_", "-") for name in missing)
            raise ValueError(f"{self.command} needs {flags}")
        if self.command in ("families", "bounds", "reduce") and self.k is not None and self.k < 4:
            raise ValueError(f"{self.command} needs --k >= 4")
        if self.command == "report" and self.k_min is not None and self.k_min < 4:
            raise ValueError("report needs --k-min >= 4")
        if self.command in ("search", "report"):
            self.search_config()
        if self.resume and (self.command != "reduce" or self.out is None):
            raise ValueError("--resume needs reduce with --out")
        return self

    def search_config(self) -> SearchConfig:
        """SearchConfig for the search and report commands."""
        assert self.k_min is not None and self.k_max is not None and self.n_max is not None
        return SearchConfig(
            k_min=self.k_min,
            k_max=self.k_max,
            n_max=self.n_max,
            modulus=self.modulus,
            mode=self.mode,
        )

    @property
    def cache_path(self) -> Path | None:
        return self.cache_dir / CACHE_FILE_NAME if self.cache_dir else None

    @property
    def cursor_path(self) -> Path | None:
        return self.out.with_name(self.out.name + CURSOR_SUFFIX) if self.out else None

    @property
    def precision_bits(self) -> int:
        """--bits, or the command's default precision."""
        if self.bits is not None:
            return self.bits
        return DEFAULT_REDUCTION_BITS if self.command == "reduce" else DEFAULT_BITS
