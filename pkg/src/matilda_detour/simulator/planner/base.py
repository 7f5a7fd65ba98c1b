"""Planner contract: what the simulator hands a planner and what it gets back."""

import copy
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, Mapping, Tuple

from ...core.exceptions import InvariantError
from ...geometry import Footprint, Point2
from ...scenario import RoadMap, Waypoint


@dataclass(frozen=True)
class PlannedPath:
    """Points for the ego to follow, each with a target speed in m/s."""

    points: Tuple[Point2, ...]
    speeds: Tuple[float, ...]

    def __post_init__(self) -> None:
        problems = []
        if len(self.points) < 2:
            problems.append(f"planned path needs at least 2 points, got {len(self.points)}")
        if len(self.speeds) != len(self.points):
            problems.append("planned path needs one speed per point")
        if any(v < 0 for v in self.speeds):
            problems.append("planned speeds must be >= 0")
        if problems:
            raise InvariantError(problems)


@dataclass(frozen=True)
class WorldView:
    """Perfect-perception snapshot given to the planner at time ``t``."""

    t: float
    ego: Waypoint
    ego_footprint: Footprint
    participants: Mapping[str, Waypoint]
    footprints: Mapping[str, Footprint]
    road_map: RoadMap
    destination: Point2
    goal_radius: float
    predicted: Mapping[str, Tuple[Waypoint, ...]] = field(default_factory=dict)


class Planner(ABC):
    """
    Base class for planners under test.

    ``plan`` must be deterministic for identical inputs and return a path starting
    within 0.5 m of the ego position. Raise ``NoRouteError`` when no path exists.
    """

    name: str = "planner"

    def reset(self, road_map: RoadMap, rng_seed: int) -> None:
        """Called once before each simulation."""

    @abstractmethod
    def plan(self, view: WorldView) -> PlannedPath:
        raise NotImplementedError

    def describe(self) -> Dict[str, object]:
        return {"name": self.name}

    def fork(self) -> "Planner":
        """Independent instance for one simulation; caches that never change may be shared."""
        return copy.copy(self)


__all__ = ["PlannedPath", "WorldView", "Planner"]
