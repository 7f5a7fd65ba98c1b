"""Search strategies: which mutation, feedback and selection each variant wires in."""

import re
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Union

import numpy as np

from ..config.schema import EngineConfig, KernelSpec, MutationConfig
from ..core.exceptions import UnknownStrategyError
from ..core.types import MutationOp, SelectionMode, Strategy
from ..feedback import Fitness, fitness, rank_top_n, select_roulette, select_uniform
from ..mutation import MutationOutcome, mutate, random_mutate
from ..oracle import ConsistencyVerdict
from ..scenario import Observation, RoadMap, Scenario


class MutationMode(str, Enum):
    NON_INVASIVE = "non_invasive"
    RANDOM = "random"


class FeedbackMode(str, Enum):
    FULL = "full"
    NONE = "none"
    PATH = "path"
    BEHAVIOR = "behavior"
    CONSISTENCY = "consistency"


@dataclass(frozen=True)
class Pipeline:
    """The parts of the search loop a strategy substitutes; the rest never changes."""

    strategy: Strategy
    mutation_mode: MutationMode
    mutation: MutationConfig
    feedback: FeedbackMode
    selection: SelectionMode
    kernel: KernelSpec

    def mutate(
        self,
        seed: Scenario,
        seed_obs: Observation,
        current: Scenario,
        current_obs: Optional[Observation],
        road_map: RoadMap,
        rng: np.random.Generator,
    ) -> MutationOutcome:
        if self.mutation_mode == MutationMode.RANDOM:
            return random_mutate(current, road_map, self.mutation, rng, horizon=seed_obs.duration)
        return mutate(seed_obs, current, current_obs, self.mutation, rng, road_map=road_map, seed=seed)

    def score(self, seed_obs: Observation, cand_obs: Observation, verdict: ConsistencyVerdict) -> Fitness:
        if self.feedback == FeedbackMode.NONE:
            return Fitness.zero()
        if self.feedback == FeedbackMode.CONSISTENCY:
            return Fitness.from_consistency(verdict.similarity)
        full = fitness(seed_obs, cand_obs, self.kernel)
        if self.feedback == FeedbackMode.PATH:
            return full.without_behavior()
        if self.feedback == FeedbackMode.BEHAVIOR:
            return full.without_path()
        return full

    def select(self, totals: Sequence[float], n: int, rng: np.random.Generator) -> List[int]:
        """Indices of the members that survive into the next population."""
        if self.selection == SelectionMode.UNIFORM:
            return select_uniform(len(totals), n, rng)
        if self.selection == SelectionMode.ROULETTE:
            return select_roulette(totals, n, rng)
        return rank_top_n(totals, n)


_CAMEL_BOUNDARY = re.compile(r"(?<=[a-z0-9])(?=[A-Z])|(?<=[A-Z])(?=[A-Z][a-z])")


def parse_strategy(name: Union[str, Strategy]) -> Strategy:
    """Accept snake, kebab or CamelCase spellings: ``random_delta``, ``random-delta``, ``RandomDelta``."""
    if isinstance(name, Strategy):
        return name
    key = _CAMEL_BOUNDARY.sub("_", str(name).strip()).lower().replace("-", "_")
    try:
        return Strategy(key)
    except ValueError:
        raise UnknownStrategyError(str(name), [s.value for s in Strategy]) from None


def strategy_dispatch(cfg: EngineConfig, strategy: Union[str, Strategy, None] = None) -> Pipeline:
    """
    Wire the pipeline for ``cfg.strategy`` (or ``strategy`` when given).

    Raises:
        UnknownStrategyError: If the strategy name is not recognised.
    """
    chosen = parse_strategy(strategy if strategy is not None else cfg.strategy)
    mutation = cfg.mutation
    mode = MutationMode.NON_INVASIVE
    feedback = FeedbackMode.FULL
    selection = cfg.selection

    if chosen == Strategy.RANDOM:
        mode, feedback, selection = MutationMode.RANDOM, FeedbackMode.NONE, SelectionMode.UNIFORM
    elif chosen == Strategy.RANDOM_DELTA:
        feedback, selection = FeedbackMode.NONE, SelectionMode.UNIFORM
    elif chosen == Strategy.WITHOUT_CONS:
        mode = MutationMode.RANDOM
    elif chosen == Strategy.WITHOUT_MOT:
        mutation = mutation.model_copy(update={"delta_t": cfg.sim.sim_dt})
    elif chosen == Strategy.WITHOUT_REM:
        weights = {MutationOp.ADD: 1.0, MutationOp.REMOVE: 0.0, MutationOp.CHANGE: 0.0}
        mutation = mutation.model_copy(update={"op_weights": weights})
    elif chosen == Strategy.F_RANDOM:
        # fitness is still computed and logged, only selection ignores it
        selection = SelectionMode.UNIFORM
    elif chosen == Strategy.F_CON:
        feedback = FeedbackMode.CONSISTENCY
    elif chosen == Strategy.F_PATH:
        feedback = FeedbackMode.PATH
    elif chosen == Strategy.F_BEHAVIOR:
        feedback = FeedbackMode.BEHAVIOR

    return Pipeline(chosen, mode, mutation, feedback, selection, cfg.kernel)


__all__ = ["FeedbackMode", "MutationMode", "Pipeline", "parse_strategy", "strategy_dispatch"]
