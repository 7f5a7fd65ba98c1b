#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Matilda Detour - search for non-optimal path-planning decisions

Command-line shell over the detour engine. Each command collects its flags and
hands them to a hook in ``matilda_detour.app_hooks``; the hooks do the work and
report errors, this module only maps failures to exit codes.
"""

import logging
import sys
import traceback
from typing import Any, Dict, Optional

import click

logger = logging.getLogger(__name__)

# ============================================================================
# ERROR HANDLER
# ============================================================================


def handle_error(error: Exception, verbose: bool = False) -> None:
    """Exit with the code that belongs to ``error``; hooks have already shown it."""
    from matilda_detour.internal.hooks.error_handlers import exit_code_for

    if verbose:
        logger.debug(traceback.format_exc())
    sys.exit(exit_code_for(error))


# ============================================================================
# CLI CONTEXT
# ============================================================================


class CLIContext:
    """Shared context for CLI commands."""

    def __init__(self, config_path: Optional[str] = None, verbose: bool = False, debug: bool = False):
        self.config_path = config_path
        self.verbose = verbose
        self.debug = debug


# ============================================================================
# HOOK SYSTEM
# ============================================================================


def load_hooks():
    """Load the command implementations."""
    try:
        import matilda_detour.app_hooks as hooks_module

        return hooks_module
    except ImportError as e:
        logger.error(f"Could not load command hooks: {e}")
        return None


_HOOKS_UNSET = object()
_hooks = _HOOKS_UNSET


def get_hooks():
    """Lazily load hooks to avoid import-time side effects."""
    global _hooks
    if _hooks is _HOOKS_UNSET:
        _hooks = load_hooks()
    return _hooks


def invoke_hook(ctx: CLIContext, hook_name: str, kwargs: Dict[str, Any]) -> None:
    """Invoke a hook by name and exit with its return code when it is non-zero."""
    hooks = get_hooks()
    if not (hooks and hasattr(hooks, hook_name)):
        logger.error(f"Hook '{hook_name}' not implemented in app_hooks.py")
        sys.exit(1)
    code = getattr(hooks, hook_name)(ctx=ctx, **kwargs)
    if code:
        sys.exit(code)


# ============================================================================
# SHARED OPTIONS
# ============================================================================


def input_options(func):
    func = click.option(
        "--seed-scenario",
        "-s",
        type=click.STRING,
        default=None,
        help="Seed scenario file, or a bundled seed id (S1 ... S6)",
    )(func)
    func = click.option(
        "--map",
        type=click.Path(dir_okay=False),
        default=None,
        help="Road map file (defaults to the seed's bundled map)",
    )(func)
    return func


def search_options(func):
    options = [
        click.option("--out", "-o", type=click.Path(file_okay=False), default=None, help="Output directory"),
        click.option("--iterations", "-n", type=click.IntRange(min=0), default=None, help="Iteration budget"),
        click.option("--population", type=click.IntRange(min=1), default=None, help="Population size N"),
        click.option("--grid-size", type=click.FLOAT, default=None, help="Consistency grid cell size in meters"),
        click.option("--rng-seed", type=click.INT, default=None, help="Campaign random seed"),
        click.option(
            "--planner-preset", type=click.STRING, default=None, help="Reference planner preset (default, timid)"
        ),
        click.option("--jobs", "-j", type=click.IntRange(min=1), default=None, help="Parallel simulations"),
        click.option("--json", is_flag=True, default=False, help="Output the summary in JSON format"),
    ]
    for option in reversed(options):
        func = option(func)
    return input_options(func)


# ============================================================================
# CLI COMMANDS
# ============================================================================


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose output")
@click.option("--debug", is_flag=True, help="Enable debug output")
@click.option("--config", type=click.Path(), help="Path to config file (default: ~/.matilda/config.toml)")
@click.pass_context
def cli(ctx, verbose, debug, config):
    """Search driving scenarios for non-optimal path-planning decisions"""
    ctx.obj = CLIContext(config, verbose, debug)


@cli.command("run")
@search_options
@click.option("--strategy", type=click.STRING, default=None, help="Search strategy (guided, random, f_path, ...)")
@click.option("--epsilon", type=click.FLOAT, default=None, help="Consistency threshold")
@click.option("--delta-t", type=click.FLOAT, default=None, help="Mutation time step in seconds")
@click.pass_obj
def run(
    ctx,
    map,
    seed_scenario,
    out,
    iterations,
    population,
    grid_size,
    rng_seed,
    planner_preset,
    jobs,
    json,
    strategy,
    epsilon,
    delta_t,
):
    """Run a NoDS search campaign from a seed scenario"""
    try:
        kwargs = {
            "map": map,
            "seed_scenario": seed_scenario,
            "out": out,
            "strategy": strategy,
            "iterations": iterations,
            "population": population,
            "epsilon": epsilon,
            "grid_size": grid_size,
            "delta_t": delta_t,
            "rng_seed": rng_seed,
            "planner_preset": planner_preset,
            "jobs": jobs,
            "json": json,
        }
        invoke_hook(ctx, "on_run", kwargs)
    except Exception as e:
        handle_error(e, ctx.verbose)


@cli.command("compare")
@search_options
@click.option("--strategy", "strategies", multiple=True, help="Strategy to include (repeatable)")
@click.option("--reference", type=click.STRING, default=None, help="Strategy the others are tested against")
@click.option("--repeats", "-r", type=click.IntRange(min=1), default=3, help="Campaigns per strategy")
@click.option("--epsilon", "epsilons", multiple=True, type=click.FLOAT, help="Consistency threshold (repeatable)")
@click.option("--delta-t", "delta_ts", multiple=True, type=click.FLOAT, help="Mutation time step (repeatable)")
@click.pass_obj
def compare(
    ctx,
    map,
    seed_scenario,
    out,
    iterations,
    population,
    grid_size,
    rng_seed,
    planner_preset,
    jobs,
    json,
    strategies,
    reference,
    repeats,
    epsilons,
    delta_ts,
):
    """Compare strategies over several rng seeds and write CSV tables"""
    try:
        kwargs = {
            "map": map,
            "seed_scenario": seed_scenario,
            "out": out,
            "strategy": strategies,
            "repeats": repeats,
            "reference": reference,
            "iterations": iterations,
            "population": population,
            "epsilon": epsilons,
            "grid_size": grid_size,
            "delta_t": delta_ts,
            "rng_seed": rng_seed,
            "planner_preset": planner_preset,
            "jobs": jobs,
            "json": json,
        }
        invoke_hook(ctx, "on_compare", kwargs)
    except Exception as e:
        handle_error(e, ctx.verbose)


@cli.command("validate-seed")
@input_options
@click.option("--out", "-o", type=click.Path(file_okay=False), default=None, help="Output directory")
@click.option("--grid-size", type=click.FLOAT, default=None, help="Consistency grid cell size in meters")
@click.option("--rng-seed", type=click.INT, default=None, help="Simulation random seed")
@click.option("--planner-preset", type=click.STRING, default=None, help="Reference planner preset (default, timid)")
@click.option("--json", is_flag=True, default=False, help="Output the report in JSON format")
@click.pass_obj
def validate_seed(ctx, map, seed_scenario, out, grid_size, rng_seed, planner_preset, json):
    """Simulate a candidate seed and write its path for review"""
    try:
        kwargs = {
            "map": map,
            "seed_scenario": seed_scenario,
            "out": out,
            "grid_size": grid_size,
            "rng_seed": rng_seed,
            "planner_preset": planner_preset,
            "json": json,
        }
        invoke_hook(ctx, "on_validate_seed", kwargs)
    except Exception as e:
        handle_error(e, ctx.verbose)


@cli.command("replay")
@input_options
@click.option("--scenario", type=click.STRING, required=True, help="Mutated scenario file")
@click.option("--original", type=click.Path(dir_okay=False), default=None, help="Observation of the seed run")
@click.option("--planner-preset", type=click.STRING, default=None, help="Planner preset used to re-run the seed")
@click.option("--json", is_flag=True, default=False, help="Output the replay report in JSON format")
@click.pass_obj
def replay(ctx, map, seed_scenario, scenario, original, planner_preset, json):
    """Check that the seed's path is still traversable in a mutated scenario"""
    try:
        kwargs = {
            "map": map,
            "scenario": scenario,
            "original": original,
            "seed_scenario": seed_scenario,
            "planner_preset": planner_preset,
            "json": json,
        }
        invoke_hook(ctx, "on_replay", kwargs)
    except Exception as e:
        handle_error(e, ctx.verbose)


@cli.command("render")
@click.option("--map", type=click.Path(dir_okay=False), default=None, help="Road map file")
@click.option("--scenario", type=click.STRING, default=None, help="Scenario file or bundled seed id")
@click.option("--observation", multiple=True, type=click.Path(dir_okay=False), help="Observation file (repeatable)")
@click.option("--out", "-o", type=click.Path(dir_okay=False), required=True, help="SVG file to write")
@click.option("--grid-size", type=click.FLOAT, default=None, help="Grid cell size for the overlay")
@click.option("--grid-overlay/--no-grid-overlay", default=True, help="Shade the cells each path covers")
@click.pass_obj
def render(ctx, map, scenario, observation, out, grid_size, grid_overlay):
    """Draw a scenario and recorded ego paths as SVG"""
    try:
        kwargs = {
            "map": map,
            "scenario": scenario,
            "observation": observation,
            "out": out,
            "grid_size": grid_size,
            "grid_overlay": grid_overlay,
        }
        invoke_hook(ctx, "on_render", kwargs)
    except Exception as e:
        handle_error(e, ctx.verbose)


# ============================================================================
# MAIN ENTRY POINT
# ============================================================================


def main():
    """Main entry point for the CLI."""
    try:
        cli()
    except Exception as e:
        handle_error(e, "--verbose" in sys.argv or "--debug" in sys.argv)


if __name__ == "__main__":
    main()
