"""Consistency check between the seed's optimal path and a candidate path."""

from dataclasses import dataclass

from ..config.schema import GridSpec
from ..scenario import PathLike
from ..simulator.loop import TaskOutcome
from .grid import covered_grids, grid_similarity


@dataclass(frozen=True)
class ConsistencyVerdict:
    similarity: float
    consistent: bool
    threshold: float

    @classmethod
    def judge(cls, similarity: float, threshold: float) -> "ConsistencyVerdict":
        return cls(similarity, similarity > threshold, threshold)


def consistency_check(tau_star: PathLike, tau_prime: PathLike, spec: GridSpec, epsilon: float) -> ConsistencyVerdict:
    """
    Compare two paths on the grid.

    The paths are consistent when the Jaccard index of their covered cells is
    strictly greater than ``epsilon``; equality counts as a violation.
    """
    similarity = grid_similarity(covered_grids(tau_star, spec), covered_grids(tau_prime, spec))
    return ConsistencyVerdict.judge(similarity, epsilon)


def is_nods(outcome: TaskOutcome, verdict: ConsistencyVerdict) -> bool:
    """A completed task whose path is inconsistent with the seed's optimal path."""
    return outcome.completed and not verdict.consistent


__all__ = ["ConsistencyVerdict", "consistency_check", "is_nods"]
