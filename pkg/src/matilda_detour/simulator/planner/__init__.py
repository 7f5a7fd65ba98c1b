"""Planners under test: the contract, the reference lattice planner and named presets."""

from .base import PlannedPath, Planner, WorldView
from .lattice import CostField, Lattice, LatticePlanner, count_lane_changes
from .registry import PlannerPreset, PlannerRegistry, get_planner, list_planners, planner_registry, register_planner

__all__ = [
    "CostField",
    "Lattice",
    "LatticePlanner",
    "PlannedPath",
    "Planner",
    "PlannerPreset",
    "PlannerRegistry",
    "WorldView",
    "count_lane_changes",
    "get_planner",
    "list_planners",
    "planner_registry",
    "register_planner",
]
