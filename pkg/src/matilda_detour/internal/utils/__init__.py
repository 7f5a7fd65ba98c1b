"""Utility modules shared by the detour packages."""

from .async_utils import gather_in_threads, run_async
from .logger import (
    configure_logging,
    console,
    get_logger,
    is_json_mode,
    level_for_flags,
    set_log_level,
    silence_for_json,
)

__all__ = [
    "get_logger",
    "console",
    "configure_logging",
    "is_json_mode",
    "level_for_flags",
    "set_log_level",
    "silence_for_json",
    "run_async",
    "gather_in_threads",
]
