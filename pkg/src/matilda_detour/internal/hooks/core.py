#!/usr/bin/env python3
"""Hook handlers for the search commands: ``run`` and ``compare``."""

from pathlib import Path
from typing import Any, Dict, Optional, Sequence

from rich.table import Table

from matilda_detour.config import CliConfig, dump_config
from matilda_detour.engine import CampaignResult, compare_strategies, resolve_grid, run_campaign, write_campaign
from matilda_detour.engine.results import NODS_DIR, write_text
from matilda_detour.internal.utils import console, get_logger
from matilda_detour.report import compare_csv, curves_csv, summary_csv, write_csv, write_svg
from matilda_detour.scenario import RoadMap, ego_path
from matilda_detour.simulator import get_planner

from .error_handlers import handle_error
from .utils import build_cli_config, emit_json, flag_overrides, resolve_inputs, setup_logging_level

logger = get_logger(__name__)


def _render_nods(cfg: CliConfig, result: CampaignResult, road_map: RoadMap) -> int:
    if not cfg.render.enabled or result.seed_observation is None:
        return 0
    grid = resolve_grid(cfg.engine.grid, road_map) if cfg.render.grid_overlay else None
    seed_path = ego_path(result.seed_observation)
    for record in result.nods:
        write_svg(
            cfg.out_dir / NODS_DIR / record.scenario.id / "render.svg",
            road_map,
            record.scenario,
            {"seed": seed_path, record.scenario.id: ego_path(record.observation)},
            grid,
            title=f"{record.scenario.id} (similarity {record.verdict.similarity:.2f})",
        )
    return len(result.nods)


def _run_summary(result: CampaignResult, out_dir: Path) -> Dict[str, Any]:
    return {
        "seed_id": result.seed_id,
        "strategy": result.strategy,
        "rng_seed": result.rng_seed,
        "iterations_run": result.iterations_run,
        "nods_count": result.nods_count,
        "unique_nods_count": result.unique_nods_count,
        "mutation_valid_pct": result.mutation_valid_pct,
        "wall_s": result.wall_s,
        "out_dir": str(out_dir),
    }


def _print_run(result: CampaignResult, out_dir: Path) -> None:
    table = Table(title=f"Campaign {result.seed_id} [{result.strategy}]", show_header=False)
    table.add_column("metric", style="cyan")
    table.add_column("value")
    table.add_row("iterations", str(result.iterations_run))
    table.add_row("#NoDS", str(result.nods_count))
    table.add_row("unique #NoDS", str(result.unique_nods_count))
    table.add_row("%Mutation", f"{result.mutation_valid_pct:.1f}")
    table.add_row("wall time", f"{result.wall_s:.1f}s")
    console.print(table)
    console.print(f"[dim]Results written to {out_dir}[/dim]")


def on_run(
    ctx: Any,
    map: Optional[str],
    seed_scenario: Optional[str],
    out: Optional[str],
    strategy: Optional[str],
    iterations: Optional[int],
    population: Optional[int],
    epsilon: Optional[float],
    grid_size: Optional[float],
    delta_t: Optional[float],
    rng_seed: Optional[int],
    planner_preset: Optional[str],
    jobs: Optional[int],
    json: bool = False,
    **kwargs: Any,
) -> int:
    """Hook for 'run': one campaign from a seed scenario, written to ``--out``.

    Returns 0 when the campaign finished within its budget; a rejected seed raises
    ``SeedRejectedError``.
    """
    setup_logging_level(ctx.verbose, ctx.debug, json_output=json)
    params = {"map": map, "seed_scenario": seed_scenario, "strategy": strategy, "rng_seed": rng_seed}
    try:
        overrides = flag_overrides(
            map_path=map,
            seed_scenario=seed_scenario,
            out_dir=out,
            planner_preset=planner_preset,
            engine__strategy=strategy,
            engine__budget__iterations=iterations,
            engine__population_n=population,
            engine__epsilon=epsilon,
            engine__grid__cell_size=grid_size,
            engine__mutation__delta_t=delta_t,
            engine__rng_seed=rng_seed,
            engine__jobs=jobs,
        )
        cfg = build_cli_config(ctx.config_path, overrides)
        seed, road_map = resolve_inputs(cfg)
        planner = get_planner(cfg.planner_preset, cfg.planner or None)
        logger.info(f"Running {cfg.engine.strategy.value} on {seed.id} with planner {planner.name}")

        result = run_campaign(seed, road_map, planner, cfg.engine)
        write_campaign(cfg.out_dir, result)
        write_text(cfg.out_dir / "config.toml", dump_config(cfg))
        _render_nods(cfg, result, road_map)
    except Exception as e:
        handle_error(e, params, json_mode=json, debug=ctx.debug)
        raise

    if json:
        emit_json(_run_summary(result, cfg.out_dir))
    else:
        _print_run(result, cfg.out_dir)
    return 0


def on_compare(
    ctx: Any,
    map: Optional[str],
    seed_scenario: Optional[str],
    out: Optional[str],
    strategy: Sequence[str],
    repeats: int,
    reference: Optional[str],
    iterations: Optional[int],
    population: Optional[int],
    epsilon: Sequence[float],
    grid_size: Optional[float],
    delta_t: Sequence[float],
    rng_seed: Optional[int],
    planner_preset: Optional[str],
    jobs: Optional[int],
    json: bool = False,
    **kwargs: Any,
) -> int:
    """Hook for 'compare': every strategy over ``repeats`` rng seeds, written as CSV.

    Repeated ``--epsilon``/``--delta-t`` values sweep the threshold and the mutation
    time step; the sweep columns are added to the CSV files when either has more than
    one value.
    """
    setup_logging_level(ctx.verbose, ctx.debug, json_output=json)
    params = {"seed_scenario": seed_scenario, "strategies": list(strategy), "repeats": repeats}
    try:
        overrides = flag_overrides(
            map_path=map,
            seed_scenario=seed_scenario,
            out_dir=out,
            planner_preset=planner_preset,
            engine__budget__iterations=iterations,
            engine__population_n=population,
            engine__grid__cell_size=grid_size,
            engine__rng_seed=rng_seed,
            engine__jobs=jobs,
        )
        cfg = build_cli_config(ctx.config_path, overrides)
        seed, road_map = resolve_inputs(cfg)
        planner = get_planner(cfg.planner_preset, cfg.planner or None)
        strategies = list(strategy) or ["guided", "random_delta", "random"]

        table = compare_strategies(
            seed,
            road_map,
            planner,
            strategies,
            repeats,
            cfg.engine.budget,
            cfg=cfg.engine,
            base_rng_seed=cfg.engine.rng_seed,
            epsilons=list(epsilon) or None,
            delta_ts=list(delta_t) or None,
            reference=reference or strategies[0],
        )
        sweep = len(epsilon) > 1 or len(delta_t) > 1
        files = {
            "compare": write_csv(cfg.out_dir / "compare.csv", compare_csv(table, with_sweep=sweep)),
            "curves": write_csv(cfg.out_dir / "curves.csv", curves_csv(table, with_sweep=sweep)),
            "summary": write_csv(cfg.out_dir / "summary.csv", summary_csv(table)),
        }
    except Exception as e:
        handle_error(e, params, json_mode=json, debug=ctx.debug)
        raise

    if json:
        emit_json(
            {
                "reference": table.reference,
                "summaries": [s.__dict__ for s in table.summaries],
                "files": {k: str(v) for k, v in files.items()},
            }
        )
        return 0

    view = Table(title=f"Strategy comparison on {seed.id} (reference: {table.reference})")
    for column in ("strategy", "epsilon", "delta_t", "runs", "mean #NoDS", "mean %Mutation", "p vs reference"):
        view.add_column(column)
    for s in table.summaries:
        p_value = "-" if s.p_value is None else f"{s.p_value:.3g}"
        view.add_row(
            s.strategy,
            f"{s.epsilon:g}",
            f"{s.delta_t:g}",
            str(s.runs),
            f"{s.mean_nods:.2f}",
            f"{s.mean_mutation_valid_pct:.1f}",
            p_value,
        )
    console.print(view)
    console.print(f"[dim]CSV written to {cfg.out_dir}[/dim]")
    return 0


__all__ = ["on_run", "on_compare"]
