"""Fitness of a candidate against the seed, and population selection."""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, TypeVar

import numpy as np

from ..config.schema import KernelSpec
from ..scenario import Observation, Scenario, ego_path
from .behavior import behavior_series, mmd
from .path import path_feedback

T = TypeVar("T")


@dataclass(frozen=True)
class Fitness:
    """
    Path term, behavior term and their sum.

    ``f_con`` is zero except under the consistency-only ablation, where it holds
    ``1 - similarity`` and the other two terms are zero.
    """

    f_p: float
    f_b: float
    f_con: float = 0.0

    def __post_init__(self) -> None:
        if self.f_p < 0 or self.f_b < 0 or self.f_con < 0:
            raise ValueError(f"fitness terms must be >= 0, got {self}")

    @property
    def total(self) -> float:
        return self.f_p + self.f_b + self.f_con

    @classmethod
    def zero(cls) -> "Fitness":
        return cls(0.0, 0.0)

    @classmethod
    def from_consistency(cls, similarity: float) -> "Fitness":
        return cls(0.0, 0.0, max(0.0, 1.0 - similarity))

    def without_behavior(self) -> "Fitness":
        return Fitness(self.f_p, 0.0)

    def without_path(self) -> "Fitness":
        return Fitness(0.0, self.f_b)


def fitness(seed_obs: Observation, cand_obs: Observation, kernel: Optional[KernelSpec] = None) -> Fitness:
    """Path feedback plus MMD behavior feedback, unweighted."""
    f_p = path_feedback(ego_path(seed_obs), ego_path(cand_obs))
    f_b = mmd(behavior_series(seed_obs), behavior_series(cand_obs, seed_obs), kernel)
    return Fitness(max(0.0, f_p), max(0.0, f_b))


def rank_top_n(totals: Sequence[float], n: int) -> List[int]:
    """Indices of the ``n`` highest totals; equal totals keep input order."""
    order = sorted(range(len(totals)), key=lambda i: -totals[i])
    return order[: max(0, n)]


def select_top_n(candidates: Sequence[Tuple[Scenario, Fitness]], n: int) -> List[Scenario]:
    """The ``n`` candidates with the highest total, best first; all of them when fewer."""
    if not candidates:
        raise ValueError("select_top_n needs at least one candidate")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    picked = rank_top_n([f.total for _, f in candidates], n)
    return [candidates[i][0] for i in picked]


def select_uniform(count: int, n: int, rng: np.random.Generator) -> List[int]:
    """``min(n, count)`` distinct indices drawn uniformly."""
    k = min(n, count)
    return [int(i) for i in rng.choice(count, size=k, replace=False)]


def select_roulette(totals: Sequence[float], n: int, rng: np.random.Generator) -> List[int]:
    """Fitness-proportional draw without replacement; uniform when every total is zero."""
    weights = np.asarray(totals, dtype=float)
    k = min(n, len(weights))
    if not np.any(weights > 0):
        return select_uniform(len(weights), n, rng)
    weights = weights + 1e-12
    return [int(i) for i in rng.choice(len(weights), size=k, replace=False, p=weights / weights.sum())]


__all__ = [
    "Fitness",
    "fitness",
    "rank_top_n",
    "select_top_n",
    "select_uniform",
    "select_roulette",
]
