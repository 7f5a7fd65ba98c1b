"""Invariant checks for scenarios and road maps."""

import math
from dataclasses import dataclass
from typing import List, Optional

from ..geometry import Footprint, contains, rectangle_corners, rectangles_overlap
from .models import DEFAULT_EGO_FOOTPRINT, EGO_ID, RoadMap, Scenario

TIME_TOLERANCE = 1e-6


@dataclass(frozen=True)
class Violation:
    """One broken invariant; ``subject`` names the participant, lane or task at fault."""

    subject: str
    rule: str
    message: str

    def __str__(self) -> str:
        return f"{self.subject}: {self.message}"


def map_violations(road_map: RoadMap) -> List[Violation]:
    violations: List[Violation] = []
    ids = [lane.id for lane in road_map.lanes]
    for lane_id in sorted({i for i in ids if ids.count(i) > 1}):
        violations.append(Violation(lane_id, "unique_lane_id", "lane id is not unique"))
    known = set(ids)
    for lane in road_map.lanes:
        if len(lane.centerline) < 2:
            violations.append(Violation(lane.id, "centerline", "centerline needs at least 2 points"))
        if not lane.width > 0:
            violations.append(Violation(lane.id, "lane_width", f"width must be > 0, got {lane.width}"))
        for succ in lane.successors:
            if succ not in known:
                violations.append(Violation(lane.id, "successor", f"successor '{succ}' is not a lane of this map"))
        for side, neighbor in (("left", lane.left_neighbor), ("right", lane.right_neighbor)):
            if neighbor is not None and neighbor not in known:
                violations.append(Violation(lane.id, "neighbor", f"{side} neighbor '{neighbor}' is not a lane"))
    if not road_map.lanes:
        violations.append(Violation(road_map.id, "lanes", "map has no lanes"))
    return violations


def scenario_violations(scenario: Scenario, ego_footprint: Footprint = DEFAULT_EGO_FOOTPRINT) -> List[Violation]:
    """Every map-independent invariant of a scenario."""
    violations: List[Violation] = []
    task = scenario.task
    if not task.goal_radius > 0:
        violations.append(Violation("task", "goal_radius", f"goal radius must be > 0, got {task.goal_radius}"))
    if not task.time_limit > 0:
        violations.append(Violation("task", "time_limit", f"time limit must be > 0, got {task.time_limit}"))

    ids = [p.id for p in scenario.participants]
    for pid in sorted({i for i in ids if ids.count(i) > 1}):
        violations.append(Violation(pid, "unique_id", "participant id is not unique"))
    if EGO_ID in ids:
        violations.append(Violation(EGO_ID, "reserved_id", f"'{EGO_ID}' is reserved for the ego vehicle"))

    for p in scenario.participants:
        for w in p.trajectory:
            if not (math.isfinite(w.v) and w.v >= 0):
                violations.append(Violation(p.id, "speed", f"speed must be >= 0 at t={w.t}, got {w.v}"))
                break
        if p.is_static:
            if len(p.trajectory) != 1:
                violations.append(Violation(p.id, "static_track", "static obstacle needs exactly one waypoint"))
            elif p.initial.v != 0 or p.initial.a != 0:
                violations.append(Violation(p.id, "static_track", "static obstacle must have v = 0 and a = 0"))
            continue
        times = [w.t for w in p.trajectory]
        steps = [b - a for a, b in zip(times, times[1:])]
        if any(step <= 0 for step in steps):
            violations.append(Violation(p.id, "timestamps", "trajectory timestamps must be strictly increasing"))
        elif steps and max(steps) - min(steps) > TIME_TOLERANCE:
            violations.append(Violation(p.id, "timestamps", "trajectory timestamps must have a uniform step"))

    boxes = [(p.id, rectangle_corners(p.state_at(0.0).pose, p.footprint)) for p in scenario.participants]
    for i, (id_a, corners_a) in enumerate(boxes):
        for id_b, corners_b in boxes[i + 1 :]:
            if rectangles_overlap(corners_a, corners_b):
                violations.append(Violation(id_a, "overlap_t0", f"overlaps '{id_b}' at t=0"))
    ego_box = rectangle_corners(task.start, ego_footprint)
    for pid, corners in boxes:
        if rectangles_overlap(ego_box, corners):
            violations.append(Violation(pid, "overlap_ego_t0", "overlaps the ego start pose at t=0"))
    return violations


def validate_scenario(
    scenario: Scenario,
    road_map: RoadMap,
    ego_footprint: Optional[Footprint] = None,
) -> List[Violation]:
    """
    Check every scenario and map invariant plus on-map placement.

    Returns an empty list for a valid scenario; otherwise one entry per problem,
    each naming the participant (or ``task``/lane) involved.
    """
    violations = map_violations(road_map)
    violations.extend(scenario_violations(scenario, ego_footprint or DEFAULT_EGO_FOOTPRINT))
    if scenario.map_id != road_map.id:
        violations.append(Violation("task", "map_id", f"scenario targets map '{scenario.map_id}', not '{road_map.id}'"))

    drivable = road_map.drivable
    if not contains(drivable, scenario.task.start.position):
        violations.append(Violation("task", "on_map", "ego start lies outside the drivable area"))
    if not contains(drivable, scenario.task.destination):
        violations.append(Violation("task", "on_map", "destination lies outside the drivable area"))
    for p in scenario.participants:
        if not contains(drivable, p.initial.position):
            violations.append(Violation(p.id, "on_map", "initial position lies outside the drivable area"))
    return violations


__all__ = ["Violation", "map_violations", "scenario_violations", "validate_scenario"]
