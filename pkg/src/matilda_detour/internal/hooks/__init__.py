#!/usr/bin/env python3
"""
Hooks module for the detour CLI business logic.

This module provides all hook handlers for the CLI commands:
- core: on_run, on_compare (search campaigns)
- scenario: on_validate_seed, on_replay, on_render (single-scenario inspection)
- error_handlers: error display and exit codes
- utils: config assembly and input resolution
"""

from .core import on_compare, on_run
from .error_handlers import EXIT_ERROR, EXIT_SEED_REJECTED, EXIT_USAGE, exit_code_for, handle_error
from .scenario import on_render, on_replay, on_validate_seed
from .utils import build_cli_config, flag_overrides, resolve_inputs, setup_logging_level

__all__ = [
    # Utils
    "build_cli_config",
    "flag_overrides",
    "resolve_inputs",
    "setup_logging_level",
    # Errors
    "EXIT_ERROR",
    "EXIT_SEED_REJECTED",
    "EXIT_USAGE",
    "exit_code_for",
    "handle_error",
    # Core
    "on_run",
    "on_compare",
    # Scenario
    "on_validate_seed",
    "on_replay",
    "on_render",
]
