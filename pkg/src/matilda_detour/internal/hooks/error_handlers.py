#!/usr/bin/env python3
"""Error display and exit codes for CLI hooks.

Every ``DetourError`` is shown once, rich-formatted or as a JSON document, and then
re-raised so the command wrapper can pick the exit code.
"""

import json as json_module
import os
import traceback
from typing import Any, Dict, Optional

import rich_click as click

from matilda_detour.core.exceptions import (
    ConfigError,
    ConfigurationError,
    DetourError,
    InvariantError,
    NoRouteError,
    ScenarioLoadError,
    SeedRejectedError,
    UnknownPlannerError,
)
from matilda_detour.internal.utils import console

EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_SEED_REJECTED = 3


def exit_code_for(error: BaseException) -> int:
    if isinstance(error, SeedRejectedError):
        return EXIT_SEED_REJECTED
    if isinstance(error, (ConfigurationError, click.UsageError)):
        return EXIT_USAGE
    return EXIT_ERROR


def _hint(error: Exception) -> Optional[str]:
    if isinstance(error, UnknownPlannerError) and not error.details.get("known"):
        return "Run 'detour run --help' to see the planner presets"
    if isinstance(error, ConfigError) and error.details.get("field"):
        return f"Check the '{error.details['field']}' setting in your config file or flags"
    if isinstance(error, ScenarioLoadError):
        return "Pass a scenario file or a bundled seed id (S1 ... S6)"
    if isinstance(error, SeedRejectedError):
        return "Run 'detour validate-seed' to inspect the seed run"
    if isinstance(error, NoRouteError):
        return "Try the default planner preset or a larger start search radius"
    return None


def display_error_json(error: Exception, params: Dict[str, Any]) -> None:
    """Display error in JSON format for machine consumption."""
    error_output = {
        "error": getattr(error, "message", str(error)),
        "error_type": error.__class__.__name__,
        "details": getattr(error, "details", {}),
        "exit_code": exit_code_for(error),
        "parameters": params,
    }
    click.echo(json_module.dumps(error_output, indent=2, default=str), err=True)


def display_error_rich(error: Exception, debug: bool = False) -> None:
    """Display error with rich formatting and a hint where one applies."""
    if isinstance(error, SeedRejectedError):
        console.print(f"[red]❌ Seed rejected: {error.details.get('reason', error.message)}[/red]")
    elif isinstance(error, InvariantError):
        console.print("[red]❌ Invalid input:[/red]")
        for violation in error.details.get("violations", [])[:5]:
            console.print(f"   • {violation}")
    elif isinstance(error, DetourError):
        console.print(f"[red]❌ {error.message}[/red]")
    else:
        console.print(f"[red]Error: {error}[/red]")

    hint = _hint(error)
    if hint:
        console.print(f"[dim]💡 {hint}[/dim]")

    if debug:
        traceback.print_exc()


def handle_error(
    error: Exception,
    params: Dict[str, Any],
    json_mode: bool = False,
    debug: bool = False,
) -> None:
    """Show ``error`` in the requested format, then re-raise it."""
    debug = debug or os.getenv("DETOUR_DEBUG", "").lower() == "true"
    if json_mode:
        display_error_json(error, params)
    else:
        display_error_rich(error, debug=debug)
    raise error


__all__ = [
    "EXIT_ERROR",
    "EXIT_SEED_REJECTED",
    "EXIT_USAGE",
    "display_error_json",
    "display_error_rich",
    "exit_code_for",
    "handle_error",
]
