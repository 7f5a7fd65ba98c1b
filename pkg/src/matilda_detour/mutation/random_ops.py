"""Unconstrained random mutation for the Random baseline and the no-constraint ablation."""

from typing import List, Optional

import numpy as np

from ..config.schema import MutationConfig
from ..core.exceptions import EmptyRegionError
from ..core.types import MutationOp, Origin, ParticipantKind
from ..geometry import (
    Footprint,
    Pose,
    rectangle_corners,
    rectangles_overlap,
    region_intersection,
    sample_point,
    sector_from_state,
)
from ..scenario import Participant, RoadMap, Scenario, Waypoint
from .operators import MutationOutcome, mutation_windows, new_participant_id, npc_track, removable


def _clear_at_start(scenario: Scenario, pose: Pose, footprint: Footprint, ego_footprint: Footprint) -> bool:
    corners = rectangle_corners(pose, footprint)
    if rectangles_overlap(corners, rectangle_corners(scenario.task.start, ego_footprint)):
        return False
    return not any(
        rectangles_overlap(corners, rectangle_corners(p.state_at(0.0).pose, p.footprint)) for p in scenario.participants
    )


def _random_walk(
    start: Pose, road_map: RoadMap, cfg: MutationConfig, horizon: float, rng: np.random.Generator
) -> List[Pose]:
    poses = [start]
    for _ in mutation_windows(horizon, cfg.delta_t):
        current = poses[-1]
        sector = sector_from_state(current, cfg.npc_speed_max, cfg.npc_steer_max, cfg.delta_t)
        area = region_intersection([sector, road_map.drivable])
        try:
            p = sample_point(area, rng)
        except EmptyRegionError:
            poses.append(current)
            continue
        heading = current.position.bearing_to(p) if current.position.distance_to(p) > 1e-6 else current.heading
        poses.append(Pose(p, heading))
    return poses


def random_mutate(
    current: Scenario,
    road_map: RoadMap,
    cfg: MutationConfig,
    rng: np.random.Generator,
    horizon: Optional[float] = None,
) -> MutationOutcome:
    """
    Add a participant anywhere on the drivable area, or remove an added one.

    Only non-overlap at t=0 is enforced. Adding is chosen with probability
    ``w_add / (w_add + w_remove)`` and is replaced by removal once
    ``cfg.max_added`` is reached. NPC tracks are random walks through their
    kinematic sectors over ``horizon`` (the task time limit by default).
    """
    w_add = cfg.op_weights.get(MutationOp.ADD, 0.0)
    w_remove = cfg.op_weights.get(MutationOp.REMOVE, 0.0)
    p_add = w_add / (w_add + w_remove) if w_add + w_remove > 0 else 1.0
    adding = bool(rng.random() < p_add) and len(current.added) < cfg.max_added

    if not adding:
        candidates = removable(current)
        if not candidates:
            return MutationOutcome.abort(current, MutationOp.REMOVE, "no added participants")
        victim = candidates[int(rng.integers(len(candidates)))]
        remaining = tuple(p for p in current.participants if p.id != victim.id)
        return MutationOutcome(current.with_participants(remaining), MutationOp.REMOVE, False)

    static = bool(rng.random() < cfg.static_fraction)
    footprint = (cfg.static_footprint if static else cfg.npc_footprint).to_footprint()
    ego_footprint = cfg.ego_footprint.to_footprint()
    start: Optional[Pose] = None
    for _ in range(cfg.sample_attempts):
        p = sample_point(road_map.drivable, rng)
        pose = Pose(p, road_map.lane_heading(p))
        if _clear_at_start(current, pose, footprint, ego_footprint):
            start = pose
            break
    if start is None:
        return MutationOutcome.abort(current, MutationOp.ADD, "no free start pose")

    if static:
        track = (Waypoint(0.0, start.position, start.heading, 0.0, 0.0),)
        kind = ParticipantKind.STATIC_OBSTACLE
    else:
        span = current.task.time_limit if horizon is None else horizon
        track = npc_track(_random_walk(start, road_map, cfg, span, rng), cfg.delta_t)
        kind = ParticipantKind.NPC_VEHICLE
    participant = Participant(new_participant_id(current, rng), kind, footprint, track, Origin.ADDED)
    return MutationOutcome(current.with_participants(current.participants + (participant,)), MutationOp.ADD, False)


__all__ = ["random_mutate"]
