"""Rich-backed logging for the detour engine and CLI.

Library modules call ``get_logger(__name__)`` and never touch handlers. The CLI
decides once per command how loud the run is: ``configure_logging`` for the
terminal, ``silence_for_json`` when stdout must carry a single JSON document.
"""

import inspect
import logging
import os
from typing import Optional, Union

from rich.console import Console
from rich.logging import RichHandler
from rich.traceback import install

PACKAGE_LOGGER = "matilda_detour"

# Third-party loggers that are chatty at INFO (font discovery, backend selection).
NOISY_LIBRARIES = ("matplotlib", "PIL", "fontTools")

LEVELS = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
}

console = Console()


def is_json_mode() -> bool:
    """True when the process was asked for machine-readable output only."""
    return os.environ.get("DETOUR_JSON_MODE", "").lower() == "true"


if not is_json_mode():
    install(show_locals=os.environ.get("RICH_TRACEBACK_SHOW_LOCALS", "false").lower() == "true")


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """
    Logger for a detour module.

    Args:
        name: Logger name. If None, uses the calling module's name.
    """
    if name is None:
        frame = inspect.currentframe()
        caller = frame.f_back if frame else None
        name = caller.f_globals.get("__name__", PACKAGE_LOGGER) if caller else PACKAGE_LOGGER
    return logging.getLogger(name)


def level_from_env(default: int = logging.WARNING) -> int:
    """``DETOUR_LOG_LEVEL`` (a level name), then ``DEBUG=1``, then ``default``."""
    name = os.environ.get("DETOUR_LOG_LEVEL", "").upper()
    if name in LEVELS:
        return LEVELS[name]
    if os.environ.get("DEBUG", "").lower() in ("true", "1", "yes", "on"):
        return logging.DEBUG
    return default


def level_for_flags(verbose: bool = False, debug: bool = False) -> int:
    """``--debug`` beats ``--verbose``; without either the environment decides."""
    if debug:
        return logging.DEBUG
    if verbose:
        return logging.INFO
    return level_from_env()


def set_log_level(level: Union[str, int]) -> int:
    """Set the root level from a name or a number and return the number."""
    if isinstance(level, str):
        if level.upper() not in LEVELS:
            get_logger(__name__).warning(f"Unknown log level {level!r}, keeping the current one")
            return logging.getLogger().level
        level = LEVELS[level.upper()]
    logging.getLogger().setLevel(level)
    return level


def configure_logging(level: Optional[int] = None, quiet_libraries: bool = True) -> None:
    """
    Route log records through a single ``RichHandler`` on the shared console.

    Safe to call once per command; the handler is installed only the first time.
    """
    if level is None:
        level = level_from_env()

    root = logging.getLogger()
    if not any(isinstance(h, RichHandler) for h in root.handlers):
        root.handlers = [h for h in root.handlers if not isinstance(h, logging.NullHandler)]
        handler = RichHandler(console=console, rich_tracebacks=True, show_path=False, log_time_format="[%X]")
        handler.setFormatter(logging.Formatter("%(message)s"))
        root.addHandler(handler)
    root.setLevel(level)

    for name in NOISY_LIBRARIES:
        logging.getLogger(name).setLevel(logging.WARNING if quiet_libraries else level)


def silence_for_json() -> None:
    """Drop every root handler so stdout carries the JSON document only."""
    root = logging.getLogger()
    root.handlers = []
    root.setLevel(logging.CRITICAL + 1)


if is_json_mode():
    silence_for_json()


__all__ = [
    "PACKAGE_LOGGER",
    "console",
    "configure_logging",
    "get_logger",
    "is_json_mode",
    "level_for_flags",
    "level_from_env",
    "set_log_level",
    "silence_for_json",
]
