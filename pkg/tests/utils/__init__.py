"""Test utilities and shared scenario builders."""

from .builders import (
    cruising_observation,
    ego_observation,
    npc_vehicle,
    static_obstacle,
    straight_scenario,
    straight_task,
    two_lane_map,
)

__all__ = [
    "cruising_observation",
    "ego_observation",
    "npc_vehicle",
    "static_obstacle",
    "straight_scenario",
    "straight_task",
    "two_lane_map",
]
