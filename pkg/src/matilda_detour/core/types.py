"""Shared enumerations used across the detour search packages."""

from enum import Enum


class ParticipantKind(str, Enum):
    STATIC_OBSTACLE = "static_obstacle"
    NPC_VEHICLE = "npc_vehicle"


class Origin(str, Enum):
    """Whether a participant belongs to the seed scenario or was added by mutation."""

    SEED = "seed"
    ADDED = "added"


class OutcomeStatus(str, Enum):
    COMPLETED = "completed"
    COLLISION = "collision"
    TIMEOUT = "timeout"
    STUCK = "stuck"


class MutationOp(str, Enum):
    ADD = "add"
    REMOVE = "remove"
    CHANGE = "change"


class Strategy(str, Enum):
    """Search strategies: the full guided pipeline, baselines and ablations."""

    GUIDED = "guided"
    RANDOM = "random"
    RANDOM_DELTA = "random_delta"
    WITHOUT_CONS = "without_cons"
    WITHOUT_MOT = "without_mot"
    WITHOUT_REM = "without_rem"
    F_RANDOM = "f_random"
    F_CON = "f_con"
    F_PATH = "f_path"
    F_BEHAVIOR = "f_behavior"


class SelectionMode(str, Enum):
    TOP_N = "top_n"
    ROULETTE = "roulette"
    UNIFORM = "uniform"


__all__ = [
    "ParticipantKind",
    "Origin",
    "OutcomeStatus",
    "MutationOp",
    "Strategy",
    "SelectionMode",
]
