#!/usr/bin/env python3
"""Hook handlers for inspecting single scenarios: ``validate-seed``, ``replay``, ``render``."""

from pathlib import Path
from typing import Any, List, Optional, Sequence

from matilda_detour.core.exceptions import ConfigError, SeedRejectedError
from matilda_detour.engine import resolve_grid
from matilda_detour.internal.utils import console, get_logger
from matilda_detour.oracle import covered_grids
from matilda_detour.report import LabeledPath, write_svg
from matilda_detour.scenario import (
    DrivingPath,
    ego_path,
    read_map,
    read_observation,
    validate_scenario,
    write_observation,
)
from matilda_detour.simulator import count_lane_changes, get_planner, replay_report, simulate

from .error_handlers import EXIT_ERROR, handle_error
from .utils import build_cli_config, emit_json, flag_overrides, load_scenario_arg, resolve_map, setup_logging_level

logger = get_logger(__name__)


def on_validate_seed(
    ctx: Any,
    map: Optional[str],
    seed_scenario: Optional[str],
    out: Optional[str],
    grid_size: Optional[float],
    rng_seed: Optional[int],
    planner_preset: Optional[str],
    json: bool = False,
    **kwargs: Any,
) -> int:
    """Hook for 'validate-seed': simulate a candidate seed and write what a reviewer needs.

    Writes ``observation.json`` and ``seed.svg`` (ego path with its covered grid cells)
    to ``--out`` even when the run does not complete, then raises
    ``SeedRejectedError`` in that case with the report under ``details["report"]``.
    """
    setup_logging_level(ctx.verbose, ctx.debug, json_output=json)
    params = {"map": map, "seed_scenario": seed_scenario}
    try:
        overrides = flag_overrides(
            map_path=map,
            seed_scenario=seed_scenario,
            out_dir=out,
            planner_preset=planner_preset,
            engine__grid__cell_size=grid_size,
            engine__rng_seed=rng_seed,
        )
        cfg = build_cli_config(ctx.config_path, overrides)
        seed, bundled = load_scenario_arg(cfg.seed_scenario)
        road_map = resolve_map(seed, cfg.map_path, bundled)
        violations = validate_scenario(seed, road_map, cfg.engine.sim.vehicle.footprint)
        if violations:
            raise SeedRejectedError(seed.id, "; ".join(str(v) for v in violations[:3]))

        planner = get_planner(cfg.planner_preset, cfg.planner or None)
        observation, outcome = simulate(seed, road_map, planner, cfg.engine.sim, cfg.engine.rng_seed)
        path = ego_path(observation)
        grid = resolve_grid(cfg.engine.grid, road_map)
        cells = covered_grids(path, grid)
        write_observation(cfg.out_dir / "observation.json", observation)
        title = f"{seed.id}: {outcome.status.value}"
        write_svg(cfg.out_dir / "seed.svg", road_map, seed, {seed.id: path}, grid, title=title)

        report = {
            "seed_id": seed.id,
            "map_id": road_map.id,
            "planner": planner.describe(),
            "status": outcome.status.value,
            "elapsed": outcome.elapsed,
            "collision_pair": list(outcome.collision_pair) if outcome.collision_pair else None,
            "path_length": path.length,
            "lane_changes": count_lane_changes(road_map, path.points),
            "covered_cells": len(cells),
            "grid": {"cell_size": grid.cell_size, "origin": list(grid.origin_point.as_tuple())},
            "out_dir": str(cfg.out_dir),
        }
        if not outcome.completed:
            rejected = SeedRejectedError(seed.id, f"run ended with {outcome.status.value} after {outcome.elapsed:.1f}s")
            # The JSON error document carries the report; nothing else goes to stdout.
            rejected.details["report"] = report
            raise rejected
    except Exception as e:
        handle_error(e, params, json_mode=json, debug=ctx.debug)
        raise

    if json:
        emit_json(report)
    else:
        console.print(f"[green]✓ {seed.id} completed in {outcome.elapsed:.1f}s[/green]")
        console.print(f"  path length {path.length:.1f} m, {report['lane_changes']} lane change(s)")
        console.print(f"  {len(cells)} covered cells at {grid.cell_size:g} m")
        console.print(f"[dim]Review {cfg.out_dir / 'seed.svg'} to confirm the path is optimal[/dim]")
    return 0


def _original_path(original: Optional[str], seed_arg: Optional[str], cfg: Any) -> DrivingPath:
    """The seed's driving path, from a recorded observation or by simulating the seed."""
    if original is not None:
        return ego_path(read_observation(Path(original)))
    if seed_arg is None:
        raise ConfigError("cli", "replay needs --original or --seed-scenario", "original")
    seed, bundled = load_scenario_arg(seed_arg)
    road_map = resolve_map(seed, cfg.map_path, bundled)
    planner = get_planner(cfg.planner_preset, cfg.planner or None)
    observation, _ = simulate(seed, road_map, planner, cfg.engine.sim, cfg.engine.rng_seed)
    return ego_path(observation)


def on_replay(
    ctx: Any,
    map: Optional[str],
    scenario: str,
    original: Optional[str],
    seed_scenario: Optional[str],
    planner_preset: Optional[str],
    json: bool = False,
    **kwargs: Any,
) -> int:
    """Hook for 'replay': can the seed's path still be driven among the mutated participants?

    Returns 0 when the replay passes and 1 when it fails.
    """
    setup_logging_level(ctx.verbose, ctx.debug, json_output=json)
    params = {"scenario": scenario, "original": original, "seed_scenario": seed_scenario}
    try:
        cfg = build_cli_config(ctx.config_path, flag_overrides(map_path=map, planner_preset=planner_preset))
        mutated, bundled = load_scenario_arg(scenario)
        road_map = resolve_map(mutated, cfg.map_path, bundled)
        path = _original_path(original, seed_scenario, cfg)
        report = replay_report(mutated, path, road_map, cfg.engine.sim, cfg.engine.mutation.clearance)
    except Exception as e:
        handle_error(e, params, json_mode=json, debug=ctx.debug)
        raise

    if json:
        emit_json(
            {
                "scenario_id": mutated.id,
                "passed": report.passed,
                "reached_goal": report.reached_goal,
                "collision": list(report.collision) if report.collision else None,
                "tight_participant": report.tight_participant,
                "min_clearance": report.min_clearance if report.min_clearance != float("inf") else None,
                "failed_at": report.failed_at,
            }
        )
    elif report.passed:
        console.print(f"[green]✓ Original path is traversable in {mutated.id}[/green]")
        if report.min_clearance != float("inf"):
            console.print(f"  minimum clearance to added participants: {report.min_clearance:.2f} m")
    else:
        console.print(f"[red]✗ Original path is blocked in {mutated.id}[/red]")
        if report.collision:
            first, second = report.collision
            console.print(f"  collision between {first} and {second} at t={report.failed_at}s")
        elif report.tight_participant:
            console.print(
                f"  {report.tight_participant} closer than {cfg.engine.mutation.clearance} m at t={report.failed_at}s"
            )
        elif not report.reached_goal:
            console.print("  path ends outside the goal region")
    return 0 if report.passed else EXIT_ERROR


def _path_label(path: Path) -> str:
    """File stem, or the folder name for the generic ``observation.json`` of a NoDS."""
    if path.stem == "observation" and path.parent.name:
        return path.parent.name
    return path.stem


def on_render(
    ctx: Any,
    map: Optional[str],
    scenario: Optional[str],
    observation: Sequence[str],
    out: str,
    grid_size: Optional[float],
    grid_overlay: bool = True,
    **kwargs: Any,
) -> int:
    """Hook for 'render': draw a scenario and any number of recorded ego paths as SVG."""
    setup_logging_level(ctx.verbose, ctx.debug)
    params = {"scenario": scenario, "observation": list(observation), "out": out}
    try:
        cfg = build_cli_config(ctx.config_path, flag_overrides(map_path=map, engine__grid__cell_size=grid_size))
        if scenario is not None:
            drawn, bundled = load_scenario_arg(scenario)
            road_map = resolve_map(drawn, cfg.map_path, bundled)
        elif cfg.map_path is not None:
            drawn, road_map = None, read_map(cfg.map_path)
        else:
            raise ConfigError("cli", "render needs --scenario or --map", "scenario")

        paths: List[LabeledPath] = [
            LabeledPath(_path_label(Path(item)), ego_path(read_observation(Path(item)))) for item in observation
        ]
        grid = resolve_grid(cfg.engine.grid, road_map) if grid_overlay else None
        target = write_svg(Path(out), road_map, drawn, paths, grid)
    except Exception as e:
        handle_error(e, params, debug=ctx.debug)
        raise

    console.print(f"[dim]Wrote {target}[/dim]")
    return 0


__all__ = ["on_validate_seed", "on_replay", "on_render"]
