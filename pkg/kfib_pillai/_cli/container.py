"""Dependency-injector wiring for one CLI invocation."""

from dependency_injector import containers, providers

from .._base import RECORD_COLUMNS
from .._core.exceptions import ConfigurationError
from .cache import RootCache
from .config import RunConfig
from .output import ResultWriter, SweepCursor


def _root_cache(config: RunConfig) -> RootCache | None:
    path = config.cache_path
    if path is None:
        return None
    if path.parent.exists() and not path.parent.is_dir():
        raise ConfigurationError(
            "Cache directory is not a directory",
            config_key="cache_dir",
            config_value=str(path.parent),
        )
    return RootCache(path)


def _result_writer(config: RunConfig) -> ResultWriter:
    columns: tuple[str, ...] | None = None
    if config.command == "search":
        columns = RECORD_COLUMNS
    elif config.command == "families":
        columns = (*RECORD_COLUMNS, "form", "verified", "discrepancy")
    return ResultWriter(config.out, config.format, columns, append=config.resume)


def _sweep_cursor(config: RunConfig) -> SweepCursor | None:
    path = config.cursor_path
    if config.command != "reduce" or path is None:
        return None
    cursor = SweepCursor(path)
    if not config.resume:
        cursor.clear()
    return cursor


class ToolkitContainer(containers.DeclarativeContainer):
    """
    Services shared by every command.

    Build with ``ToolkitContainer(config=providers.Object(run_config))``;
    tests override ``root_cache`` or ``result_writer`` with
    ``container.<name>.override(...)``.
    """

    config = providers.Dependency(instance_of=RunConfig)

    root_cache = providers.Singleton(_root_cache, config)
    result_writer = providers.Singleton(_result_writer, config)
    sweep_cursor = providers.Singleton(_sweep_cursor, config)


def build_container(config: RunConfig) -> ToolkitContainer:
    """Container bound to one validated configuration."""
    return ToolkitContainer(config=providers.Object(config))
