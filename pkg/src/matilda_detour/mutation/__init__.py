"""Scenario mutation: non-invasive operators and the unconstrained random baseline."""

from .area import (
    WindowObstacles,
    covering_observation,
    free_area,
    non_invasive_area,
    participant_segment,
    window_obstacles,
)
from .operators import (
    MutationOutcome,
    mutate,
    mutate_add,
    mutate_change,
    mutate_remove,
    mutation_windows,
    new_participant_id,
    npc_track,
    removable,
)
from .random_ops import random_mutate

__all__ = [
    "MutationOutcome",
    "WindowObstacles",
    "covering_observation",
    "free_area",
    "mutate",
    "mutate_add",
    "mutate_change",
    "mutate_remove",
    "mutation_windows",
    "new_participant_id",
    "npc_track",
    "non_invasive_area",
    "participant_segment",
    "random_mutate",
    "removable",
]
