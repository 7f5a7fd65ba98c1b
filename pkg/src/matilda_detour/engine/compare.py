"""Run several strategies over independent rng seeds and compare their yield."""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Union

import numpy as np
from scipy.stats import mannwhitneyu

from ..config.schema import BudgetSpec, EngineConfig
from ..core.types import Strategy
from ..internal.utils import get_logger
from ..scenario import RoadMap, Scenario
from ..simulator import Planner
from .campaign import run_campaign
from .strategies import parse_strategy

logger = get_logger(__name__)


@dataclass(frozen=True)
class CompareRow:
    strategy: str
    seed_id: str
    rng_seed: int
    nods_count: int
    unique_nods_count: int
    mutation_valid_pct: float
    wall_s: float
    epsilon: float
    delta_t: float


@dataclass(frozen=True)
class CurvePoint:
    strategy: str
    rng_seed: int
    epsilon: float
    delta_t: float
    iteration: int
    cumulative_nods: int


@dataclass(frozen=True)
class StrategySummary:
    """Mean yield of one strategy at one (epsilon, delta_t) setting.

    ``p_value`` is the one-sided Mann-Whitney U test that the reference strategy
    finds more NoDSs than this one; ``None`` for the reference itself.
    """

    strategy: str
    epsilon: float
    delta_t: float
    runs: int
    mean_nods: float
    mean_unique_nods: float
    mean_mutation_valid_pct: float
    p_value: Optional[float]


@dataclass
class ComparisonTable:
    reference: str
    rows: List[CompareRow] = field(default_factory=list)
    curves: List[CurvePoint] = field(default_factory=list)
    summaries: List[StrategySummary] = field(default_factory=list)

    def counts(self, strategy: str, epsilon: float, delta_t: float) -> List[int]:
        return [
            r.nods_count for r in self.rows if r.strategy == strategy and r.epsilon == epsilon and r.delta_t == delta_t
        ]


def one_sided_p(reference: Sequence[int], other: Sequence[int]) -> float:
    """P-value that ``reference`` tends to exceed ``other``; 1.0 when undefined."""
    if not reference or not other:
        return 1.0
    try:
        p = float(mannwhitneyu(reference, other, alternative="greater").pvalue)
    except ValueError:
        return 1.0
    return 1.0 if math.isnan(p) else p


def compare_strategies(
    seed: Scenario,
    road_map: RoadMap,
    planner: Planner,
    strategies: Sequence[Union[str, Strategy]],
    repeats: int,
    budget: Union[int, BudgetSpec],
    cfg: Optional[EngineConfig] = None,
    base_rng_seed: int = 0,
    epsilons: Optional[Sequence[float]] = None,
    delta_ts: Optional[Sequence[float]] = None,
    reference: Union[str, Strategy] = Strategy.GUIDED,
) -> ComparisonTable:
    """
    Campaign every strategy ``repeats`` times (rng seeds ``base_rng_seed + r``) and
    aggregate #NoDS and %Mutation.

    Every combination of ``epsilons`` and ``delta_ts`` is swept; both default to the
    values in ``cfg``.
    """
    cfg = cfg or EngineConfig()
    spec = budget if isinstance(budget, BudgetSpec) else BudgetSpec(iterations=int(budget))
    chosen = [parse_strategy(s) for s in strategies]
    ref = parse_strategy(reference)
    table = ComparisonTable(reference=ref.value)

    for epsilon in epsilons or [cfg.epsilon]:
        for delta_t in delta_ts or [cfg.mutation.delta_t]:
            mutation = cfg.mutation.model_copy(update={"delta_t": delta_t})
            for strategy in chosen:
                for r in range(repeats):
                    rng_seed = base_rng_seed + r
                    run_cfg = cfg.model_copy(
                        update={
                            "strategy": strategy,
                            "rng_seed": rng_seed,
                            "budget": spec,
                            "epsilon": epsilon,
                            "mutation": mutation,
                        }
                    )
                    result = run_campaign(seed, road_map, planner, run_cfg)
                    table.rows.append(
                        CompareRow(
                            strategy=strategy.value,
                            seed_id=seed.id,
                            rng_seed=rng_seed,
                            nods_count=result.nods_count,
                            unique_nods_count=result.unique_nods_count,
                            mutation_valid_pct=result.mutation_valid_pct,
                            wall_s=result.wall_s,
                            epsilon=epsilon,
                            delta_t=delta_t,
                        )
                    )
                    table.curves.extend(
                        CurvePoint(strategy.value, rng_seed, epsilon, delta_t, e.iteration, e.cumulative_nods)
                        for e in result.log
                    )
                    logger.info(
                        f"{strategy.value} rng={rng_seed} eps={epsilon} dt={delta_t}: "
                        f"{result.nods_count} NoDS, {result.mutation_valid_pct:.1f}% valid"
                    )
            table.summaries.extend(_summarize(table, chosen, ref, epsilon, delta_t))
    return table


def _summarize(
    table: ComparisonTable, strategies: Sequence[Strategy], reference: Strategy, epsilon: float, delta_t: float
) -> List[StrategySummary]:
    ref_counts = table.counts(reference.value, epsilon, delta_t)
    out = []
    for strategy in strategies:
        rows = [r for r in table.rows if r.strategy == strategy.value and r.epsilon == epsilon and r.delta_t == delta_t]
        counts = [r.nods_count for r in rows]
        p_value = None if strategy == reference or not ref_counts else one_sided_p(ref_counts, counts)
        out.append(
            StrategySummary(
                strategy=strategy.value,
                epsilon=epsilon,
                delta_t=delta_t,
                runs=len(rows),
                mean_nods=float(np.mean(counts)) if counts else 0.0,
                mean_unique_nods=float(np.mean([r.unique_nods_count for r in rows])) if rows else 0.0,
                mean_mutation_valid_pct=float(np.mean([r.mutation_valid_pct for r in rows])) if rows else 0.0,
                p_value=p_value,
            )
        )
    return out


def summary_by_strategy(table: ComparisonTable) -> Dict[str, StrategySummary]:
    """Summaries keyed by strategy for a table with a single (epsilon, delta_t) setting."""
    return {s.strategy: s for s in table.summaries}


__all__ = [
    "CompareRow",
    "ComparisonTable",
    "CurvePoint",
    "StrategySummary",
    "compare_strategies",
    "one_sided_p",
    "summary_by_strategy",
]
