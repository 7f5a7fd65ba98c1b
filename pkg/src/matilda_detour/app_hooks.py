"""Hook implementations for Matilda Detour."""

from typing import Optional, Sequence

from matilda_detour.internal import hooks as internal_hooks


def on_run(
    map: Optional[str] = None,
    seed_scenario: Optional[str] = None,
    out: Optional[str] = None,
    strategy: Optional[str] = None,
    iterations: Optional[int] = None,
    population: Optional[int] = None,
    epsilon: Optional[float] = None,
    grid_size: Optional[float] = None,
    delta_t: Optional[float] = None,
    rng_seed: Optional[int] = None,
    planner_preset: Optional[str] = None,
    jobs: Optional[int] = None,
    json: bool = False,
    **kwargs,
) -> int:
    return internal_hooks.on_run(
        map=map,
        seed_scenario=seed_scenario,
        out=out,
        strategy=strategy,
        iterations=iterations,
        population=population,
        epsilon=epsilon,
        grid_size=grid_size,
        delta_t=delta_t,
        rng_seed=rng_seed,
        planner_preset=planner_preset,
        jobs=jobs,
        json=bool(json),
        **kwargs,
    )


def on_validate_seed(
    map: Optional[str] = None,
    seed_scenario: Optional[str] = None,
    out: Optional[str] = None,
    grid_size: Optional[float] = None,
    rng_seed: Optional[int] = None,
    planner_preset: Optional[str] = None,
    json: bool = False,
    **kwargs,
) -> int:
    return internal_hooks.on_validate_seed(
        map=map,
        seed_scenario=seed_scenario,
        out=out,
        grid_size=grid_size,
        rng_seed=rng_seed,
        planner_preset=planner_preset,
        json=bool(json),
        **kwargs,
    )


def on_replay(
    scenario: str,
    map: Optional[str] = None,
    original: Optional[str] = None,
    seed_scenario: Optional[str] = None,
    planner_preset: Optional[str] = None,
    json: bool = False,
    **kwargs,
) -> int:
    return internal_hooks.on_replay(
        map=map,
        scenario=scenario,
        original=original,
        seed_scenario=seed_scenario,
        planner_preset=planner_preset,
        json=bool(json),
        **kwargs,
    )


def on_render(
    out: str,
    map: Optional[str] = None,
    scenario: Optional[str] = None,
    observation: Sequence[str] = (),
    grid_size: Optional[float] = None,
    grid_overlay: Optional[bool] = None,
    **kwargs,
) -> int:
    return internal_hooks.on_render(
        map=map,
        scenario=scenario,
        observation=tuple(observation or ()),
        out=out,
        grid_size=grid_size,
        grid_overlay=True if grid_overlay is None else bool(grid_overlay),
        **kwargs,
    )


def on_compare(
    map: Optional[str] = None,
    seed_scenario: Optional[str] = None,
    out: Optional[str] = None,
    strategy: Sequence[str] = (),
    repeats: Optional[int] = None,
    reference: Optional[str] = None,
    iterations: Optional[int] = None,
    population: Optional[int] = None,
    epsilon: Sequence[float] = (),
    grid_size: Optional[float] = None,
    delta_t: Sequence[float] = (),
    rng_seed: Optional[int] = None,
    planner_preset: Optional[str] = None,
    jobs: Optional[int] = None,
    json: bool = False,
    **kwargs,
) -> int:
    return internal_hooks.on_compare(
        map=map,
        seed_scenario=seed_scenario,
        out=out,
        strategy=tuple(strategy or ()),
        repeats=repeats if repeats is not None else 3,
        reference=reference,
        iterations=iterations,
        population=population,
        epsilon=tuple(epsilon or ()),
        grid_size=grid_size,
        delta_t=tuple(delta_t or ()),
        rng_seed=rng_seed,
        planner_preset=planner_preset,
        jobs=jobs,
        json=bool(json),
        **kwargs,
    )
