"""Deterministic 2D closed-loop simulator with a pluggable planner."""

from .collision import collision_check, ego_clearance
from .kinematics import DEFAULT_WHEELBASE, Command, step_ego
from .loop import TaskOutcome, checked_sim_config, simulate
from .planner import (
    LatticePlanner,
    PlannedPath,
    Planner,
    WorldView,
    count_lane_changes,
    get_planner,
    list_planners,
    register_planner,
)
from .replay import predict_constant_velocity, replay_npc
from .tracking import PurePursuitTracker
from .validation import MIN_CLEARANCE, ReplayReport, replay_report, replay_validation

__all__ = [
    "DEFAULT_WHEELBASE",
    "MIN_CLEARANCE",
    "Command",
    "LatticePlanner",
    "PlannedPath",
    "Planner",
    "PurePursuitTracker",
    "ReplayReport",
    "TaskOutcome",
    "WorldView",
    "checked_sim_config",
    "collision_check",
    "count_lane_changes",
    "ego_clearance",
    "get_planner",
    "list_planners",
    "predict_constant_velocity",
    "register_planner",
    "replay_npc",
    "replay_report",
    "replay_validation",
    "simulate",
    "step_ego",
]
