"""The search loop: mutate, simulate, check, collect NoDSs, select."""

import time
from collections import defaultdict
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from ..config.schema import EngineConfig, GridSpec
from ..core.exceptions import SeedRejectedError
from ..feedback import Fitness
from ..internal.utils import gather_in_threads, get_logger
from ..oracle import ConsistencyVerdict, consistency_check
from ..scenario import DrivingPath, Observation, RoadMap, Scenario, ego_path, validate_scenario
from ..simulator import Planner, TaskOutcome, replay_validation, simulate
from .strategies import Pipeline, strategy_dispatch

logger = get_logger(__name__)

SELECTION_STREAM = 1_000_000


@dataclass(frozen=True)
class Member:
    """A population entry with the observation of its latest simulation."""

    scenario: Scenario
    observation: Observation
    fitness: Fitness


@dataclass(frozen=True)
class NoDSRecord:
    scenario: Scenario
    observation: Observation
    verdict: ConsistencyVerdict
    iteration: int
    fitness: Fitness
    replay_valid: bool = True


@dataclass(frozen=True)
class IterationLog:
    iteration: int
    best_total: float
    mean_total: float
    offspring: int
    completed: int
    nods_found: int
    cumulative_nods: int
    mutation_attempts: int
    mutation_valid: int


@dataclass
class StageTiming:
    """Wall time per stage, summed over the campaign."""

    seconds: Dict[str, float] = field(default_factory=lambda: defaultdict(float))
    scenarios: int = 0

    @contextmanager
    def stage(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            self.seconds[name] += time.perf_counter() - start

    def per_scenario(self) -> Dict[str, float]:
        count = max(1, self.scenarios)
        return {name: total / count for name, total in sorted(self.seconds.items())}


@dataclass
class CampaignResult:
    seed_id: str
    strategy: str
    rng_seed: int
    nods: List[NoDSRecord] = field(default_factory=list)
    iterations_run: int = 0
    mutation_attempts: int = 0
    mutation_valid: int = 0
    log: List[IterationLog] = field(default_factory=list)
    population: List[str] = field(default_factory=list)
    timing: StageTiming = field(default_factory=StageTiming)
    wall_s: float = 0.0
    seed_observation: Optional[Observation] = None

    @property
    def nods_count(self) -> int:
        return len(self.nods)

    @property
    def unique_nods_count(self) -> int:
        return len({record.scenario.canonical_key() for record in self.nods})

    @property
    def mutation_valid_pct(self) -> float:
        if self.mutation_attempts == 0:
            return 0.0
        return 100.0 * self.mutation_valid / self.mutation_attempts


def candidate_rng(rng_seed: int, iteration: int, index: int) -> np.random.Generator:
    """Independent stream for one candidate, fixed by the campaign seed and its position."""
    return np.random.default_rng(np.random.SeedSequence(entropy=rng_seed, spawn_key=(iteration, index)))


def resolve_grid(grid: GridSpec, road_map: RoadMap) -> GridSpec:
    """Anchor an unanchored grid at the map's bounding-box minimum."""
    return grid if grid.origin is not None else grid.anchored_at(road_map.origin)


def simulate_seed(
    seed: Scenario, road_map: RoadMap, planner: Planner, cfg: EngineConfig
) -> Tuple[Observation, TaskOutcome]:
    """
    Simulate the seed and make sure it can anchor a campaign.

    Raises:
        SeedRejectedError: If the seed is invalid on the map or does not complete.
    """
    violations = validate_scenario(seed, road_map, cfg.sim.vehicle.footprint)
    if violations:
        raise SeedRejectedError(seed.id, "; ".join(str(v) for v in violations[:3]))
    observation, outcome = simulate(seed, road_map, planner.fork(), cfg.sim, cfg.rng_seed)
    if not outcome.completed:
        raise SeedRejectedError(seed.id, f"seed run ended with {outcome.status.value} after {outcome.elapsed:.1f}s")
    return observation, outcome


class Campaign:
    """One search run; owns the population and all counters."""

    def __init__(self, seed: Scenario, road_map: RoadMap, planner: Planner, cfg: EngineConfig, pipeline: Pipeline):
        self.seed = seed
        self.road_map = road_map
        self.planner = planner
        self.cfg = cfg
        self.pipeline = pipeline
        self.grid = resolve_grid(cfg.grid, road_map)
        self.result = CampaignResult(seed.id, pipeline.strategy.value, cfg.rng_seed)

    def _simulate(self, scenario: Scenario) -> Tuple[Observation, TaskOutcome]:
        return simulate(scenario, self.road_map, self.planner.fork(), self.cfg.sim, self.cfg.rng_seed)

    def _budget_left(self, iteration: int, started: float) -> bool:
        budget = self.cfg.budget
        if budget.iterations is not None and iteration > budget.iterations:
            return False
        if budget.wall_clock_s is not None and time.monotonic() - started >= budget.wall_clock_s:
            return False
        return True

    def _offspring(self, iteration: int, population: List[Member], seed_obs: Observation) -> List[Scenario]:
        children: List[Scenario] = []
        timing = self.result.timing
        for idx, member in enumerate(population):
            rng = candidate_rng(self.cfg.rng_seed, iteration, idx)
            with timing.stage("mutation"):
                outcome = self.pipeline.mutate(
                    self.seed, seed_obs, member.scenario, member.observation, self.road_map, rng
                )
            if outcome.aborted:
                continue
            children.append(outcome.scenario.renamed(f"{self.seed.id}-i{iteration}-c{idx}"))
        return children

    def run(self) -> CampaignResult:
        result = self.result
        started = time.monotonic()
        seed_obs, _ = simulate_seed(self.seed, self.road_map, self.planner, self.cfg)
        result.seed_observation = seed_obs
        tau_star: DrivingPath = ego_path(seed_obs)
        n = self.cfg.population_n
        population = [Member(self.seed, seed_obs, Fitness.zero()) for _ in range(n)]

        iteration = 1
        while self._budget_left(iteration, started):
            children = self._offspring(iteration, population, seed_obs)
            with result.timing.stage("simulation"):
                runs = gather_in_threads(self._simulate, children, max_workers=self.cfg.jobs)
            result.timing.scenarios += len(children)

            found = 0
            offspring: List[Member] = []
            for child, (observation, outcome) in zip(children, runs):
                result.mutation_attempts += 1
                with result.timing.stage("oracle"):
                    valid = replay_validation(child, tau_star, self.road_map, self.cfg.sim)
                    result.mutation_valid += int(valid)
                    if not outcome.completed:
                        continue
                    verdict = consistency_check(tau_star, ego_path(observation), self.grid, self.cfg.epsilon)
                with result.timing.stage("feedback"):
                    score = self.pipeline.score(seed_obs, observation, verdict)
                if not verdict.consistent:
                    result.nods.append(NoDSRecord(child, observation, verdict, iteration, score, valid))
                    found += 1
                offspring.append(Member(child, observation, score))

            pool = population + offspring
            totals = [m.fitness.total for m in pool]
            rng = candidate_rng(self.cfg.rng_seed, iteration, SELECTION_STREAM)
            population = [pool[i] for i in self.pipeline.select(totals, n, rng)]

            entry = IterationLog(
                iteration=iteration,
                best_total=max(m.fitness.total for m in population),
                mean_total=float(np.mean([m.fitness.total for m in population])),
                offspring=len(children),
                completed=len(offspring),
                nods_found=found,
                cumulative_nods=len(result.nods),
                mutation_attempts=result.mutation_attempts,
                mutation_valid=result.mutation_valid,
            )
            result.log.append(entry)
            result.iterations_run = iteration
            logger.info(
                f"[{result.strategy}] iteration {iteration}: best={entry.best_total:.3f} "
                f"nods={entry.cumulative_nods} mutation={result.mutation_valid_pct:.1f}%"
            )
            iteration += 1

        result.population = [m.scenario.id for m in population]
        result.wall_s = time.monotonic() - started
        return result


def run_campaign(
    seed: Scenario, road_map: RoadMap, planner: Planner, cfg: Optional[EngineConfig] = None
) -> CampaignResult:
    """
    Search for NoDSs around ``seed``.

    Deterministic for a given ``cfg.rng_seed`` under an iteration budget; offspring
    simulations may run on ``cfg.jobs`` threads and are merged in candidate order.

    Raises:
        SeedRejectedError: If the seed fails validation or its own simulation.
        UnknownStrategyError: If ``cfg.strategy`` is not recognised.
    """
    cfg = cfg or EngineConfig()
    pipeline = strategy_dispatch(cfg)
    try:
        return Campaign(seed, road_map, planner, cfg, pipeline).run()
    except SeedRejectedError as e:
        logger.error(e.message)
        raise


__all__ = [
    "Campaign",
    "CampaignResult",
    "IterationLog",
    "Member",
    "NoDSRecord",
    "StageTiming",
    "candidate_rng",
    "resolve_grid",
    "run_campaign",
    "simulate_seed",
]
