"""Small hand-built maps, scenarios and observations shared by the tests."""

import math
from typing import Iterable, Optional, Sequence, Tuple

from matilda_detour.core.types import Origin, ParticipantKind
from matilda_detour.geometry import Footprint, Point2, Pose
from matilda_detour.scenario import (
    Lane,
    MotionTask,
    Observation,
    Participant,
    RoadMap,
    Scenario,
    Scene,
    Waypoint,
)

LANE_WIDTH = 3.5
ROAD_LENGTH = 60.0


def two_lane_map(length: float = ROAD_LENGTH, map_id: str = "two_lane") -> RoadMap:
    """Two parallel eastbound lanes: ``right`` on y=0 and ``left`` on y=3.5."""
    right = Lane(
        id="right",
        centerline=(Point2(0.0, 0.0), Point2(length, 0.0)),
        width=LANE_WIDTH,
        left_neighbor="left",
    )
    left = Lane(
        id="left",
        centerline=(Point2(0.0, LANE_WIDTH), Point2(length, LANE_WIDTH)),
        width=LANE_WIDTH,
        right_neighbor="right",
    )
    return RoadMap(id=map_id, lanes=(right, left))


def straight_task(
    start_x: float = 2.0,
    goal_x: float = 40.0,
    y: float = 0.0,
    time_limit: float = 30.0,
    goal_radius: float = 2.0,
) -> MotionTask:
    return MotionTask(
        start=Pose.at(start_x, y, 0.0),
        destination=Point2(goal_x, y),
        goal_radius=goal_radius,
        time_limit=time_limit,
    )


def static_obstacle(
    pid: str,
    x: float,
    y: float,
    length: float = 0.6,
    width: float = 0.6,
    heading: float = 0.0,
    origin: Origin = Origin.SEED,
) -> Participant:
    return Participant(
        id=pid,
        kind=ParticipantKind.STATIC_OBSTACLE,
        footprint=Footprint(length, width),
        trajectory=(Waypoint(0.0, Point2(x, y), heading, 0.0, 0.0),),
        origin=origin,
    )


def npc_vehicle(
    pid: str,
    x: float,
    y: float,
    speed: float,
    duration: float,
    step: float = 1.0,
    heading: float = 0.0,
    origin: Origin = Origin.SEED,
) -> Participant:
    """An NPC moving in a straight line at constant speed."""
    count = int(round(duration / step))
    c, s = math.cos(heading), math.sin(heading)
    track = tuple(
        Waypoint(k * step, Point2(x + speed * c * k * step, y + speed * s * k * step), heading, speed, 0.0)
        for k in range(count + 1)
    )
    return Participant(pid, ParticipantKind.NPC_VEHICLE, Footprint(4.5, 1.9), track, origin)


def straight_scenario(
    participants: Iterable[Participant] = (),
    scenario_id: str = "straight",
    map_id: str = "two_lane",
    **task_kwargs: float,
) -> Scenario:
    return Scenario(id=scenario_id, map_id=map_id, task=straight_task(**task_kwargs), participants=tuple(participants))


def ego_observation(
    points: Sequence[Tuple[float, float]],
    dt: float = 0.1,
    headings: Optional[Sequence[float]] = None,
    speeds: Optional[Sequence[float]] = None,
    accels: Optional[Sequence[float]] = None,
) -> Observation:
    """Observation with only the ego, one scene per point."""
    n = len(points)
    headings = headings if headings is not None else [0.0] * n
    speeds = speeds if speeds is not None else [0.0] * n
    accels = accels if accels is not None else [0.0] * n
    scenes = tuple(
        Scene(i * dt, Waypoint(i * dt, Point2(x, y), headings[i], speeds[i], accels[i]))
        for i, (x, y) in enumerate(points)
    )
    return Observation(dt, scenes)


def cruising_observation(
    start_x: float = 2.0,
    speed: float = 5.0,
    duration: float = 8.0,
    dt: float = 0.1,
    y: float = 0.0,
) -> Observation:
    """Ego driving east along ``y`` at a constant ``speed``."""
    steps = int(round(duration / dt))
    points = [(start_x + speed * k * dt, y) for k in range(steps + 1)]
    return ego_observation(points, dt=dt, speeds=[speed] * len(points))


__all__ = [
    "LANE_WIDTH",
    "ROAD_LENGTH",
    "cruising_observation",
    "ego_observation",
    "npc_vehicle",
    "static_obstacle",
    "straight_scenario",
    "straight_task",
    "two_lane_map",
]
