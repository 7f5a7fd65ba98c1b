"""Non-invasive Adding, Removing and Changing operators."""

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

import numpy as np

from ..config.schema import MutationConfig
from ..core.exceptions import EmptyRegionError, SaturatedError
from ..core.types import MutationOp, Origin, ParticipantKind
from ..geometry import Footprint, Point2, Pose, rectangle_polygon, region_intersection, sample_point, sector_from_state
from ..geometry.shapes import swept_geometry
from ..internal.utils import get_logger
from ..scenario import EGO_ID, Observation, Participant, RoadMap, Scenario, Waypoint
from ..scenario.validation import scenario_violations
from .area import WindowObstacles, covering_observation, free_area, window_obstacles

logger = get_logger(__name__)


@dataclass(frozen=True)
class MutationOutcome:
    """Result of one operator call; an aborted outcome carries the input scenario unchanged."""

    scenario: Scenario
    op_used: MutationOp
    aborted: bool
    reason: Optional[str] = None

    @classmethod
    def abort(cls, scenario: Scenario, op: MutationOp, reason: str) -> "MutationOutcome":
        logger.debug(f"{op.value} aborted on {scenario.id}: {reason}")
        return cls(scenario, op, True, reason)


def new_participant_id(scenario: Scenario, rng: np.random.Generator) -> str:
    taken = {p.id for p in scenario.participants}
    while True:
        candidate = f"added-{int(rng.integers(0, 2**32)):08x}"
        if candidate not in taken:
            return candidate


def mutation_windows(horizon: float, delta_t: float) -> List[Tuple[float, float]]:
    """``[i*dt, (i+1)*dt]`` windows covering ``[0, horizon]``; at least one."""
    count = max(1, int(math.ceil(horizon / delta_t - 1e-9)))
    return [(i * delta_t, (i + 1) * delta_t) for i in range(count)]


def npc_track(poses: Sequence[Pose], delta_t: float) -> Tuple[Waypoint, ...]:
    speeds = [poses[i].position.distance_to(poses[i + 1].position) / delta_t for i in range(len(poses) - 1)]
    speeds.append(speeds[-1] if speeds else 0.0)
    accels = [(speeds[i + 1] - speeds[i]) / delta_t for i in range(len(speeds) - 1)] + [0.0]
    return tuple(
        Waypoint(i * delta_t, pose.position, pose.heading, speeds[i], accels[i]) for i, pose in enumerate(poses)
    )


class _AddAttempt:
    """State of one Adding call: windows, their obstacles, and the footprint being placed."""

    def __init__(
        self,
        seed_obs: Observation,
        base: Scenario,
        current_obs: Optional[Observation],
        cfg: MutationConfig,
        rng: np.random.Generator,
        road_map: RoadMap,
    ):
        self.seed_obs = seed_obs
        self.base = base
        self.cfg = cfg
        self.rng = rng
        self.road_map = road_map
        self.observation = covering_observation(seed_obs, base, current_obs)
        self.footprints = {p.id: p.footprint for p in base.participants}
        self.windows = mutation_windows(seed_obs.duration, cfg.delta_t)
        self._obstacles: Dict[int, WindowObstacles] = {}

    def obstacles(self, i: int) -> WindowObstacles:
        if i not in self._obstacles:
            t0, t1 = self.windows[i]
            ego_segment = self.seed_obs.segment(EGO_ID, t0, t1)
            self._obstacles[i] = window_obstacles(
                ego_segment, self.observation, (), self.cfg, t0, t1, self.footprints
            )
        return self._obstacles[i]

    def _sample_pose(self, area, check, heading_of) -> Optional[Pose]:
        for _ in range(self.cfg.sample_attempts):
            try:
                p = sample_point(area, self.rng)
            except EmptyRegionError:
                return None
            pose = Pose(p, heading_of(p))
            if check(pose):
                return pose
        return None

    def static(self, footprint: Footprint) -> Optional[Tuple[Waypoint, ...]]:
        areas = [free_area(self.obstacles(i), footprint, self.road_map) for i in range(len(self.windows))]
        area = region_intersection(areas)
        if area.is_empty:
            return None

        def clear(pose: Pose) -> bool:
            rect = rectangle_polygon(pose, footprint)
            return all(self.obstacles(i).admits(rect) for i in range(len(self.windows)))

        pose = self._sample_pose(area, clear, self.road_map.lane_heading)
        if pose is None:
            return None
        return (Waypoint(0.0, pose.position, pose.heading, 0.0, 0.0),)

    def npc(self, footprint: Footprint) -> Optional[Tuple[Waypoint, ...]]:
        start_area = free_area(self.obstacles(0), footprint, self.road_map)
        if start_area.is_empty:
            return None
        pose = self._sample_pose(
            start_area,
            lambda q: self.obstacles(0).admits(rectangle_polygon(q, footprint)),
            self.road_map.lane_heading,
        )
        if pose is None:
            return None

        poses = [pose]
        cfg = self.cfg
        for i in range(len(self.windows)):
            current = poses[-1]
            sector = sector_from_state(current, cfg.npc_speed_max, cfg.npc_steer_max, cfg.delta_t)
            if sector.is_empty:
                return None
            area = free_area(self.obstacles(i), footprint, self.road_map, within=sector)
            if area.is_empty:
                return None

            def heading_from(p: Point2, origin: Pose = current) -> float:
                if origin.position.distance_to(p) < 1e-6:
                    return origin.heading
                return origin.position.bearing_to(p)

            def clear(q: Pose, origin: Pose = current, window: int = i) -> bool:
                hull = swept_geometry([origin, q], footprint)
                return hull is not None and self.obstacles(window).admits(hull)

            nxt = self._sample_pose(area, clear, heading_from)
            if nxt is None:
                return None
            poses.append(nxt)
        return npc_track(poses, cfg.delta_t)


def _add_participant(
    seed_obs: Observation,
    base: Scenario,
    current_obs: Optional[Observation],
    cfg: MutationConfig,
    rng: np.random.Generator,
    road_map: RoadMap,
) -> Optional[Participant]:
    attempt = _AddAttempt(seed_obs, base, current_obs, cfg, rng, road_map)
    static = bool(rng.random() < cfg.static_fraction)
    if static:
        footprint = cfg.static_footprint.to_footprint()
        track = attempt.static(footprint)
        kind = ParticipantKind.STATIC_OBSTACLE
    else:
        footprint = cfg.npc_footprint.to_footprint()
        track = attempt.npc(footprint)
        kind = ParticipantKind.NPC_VEHICLE
    if track is None:
        return None
    return Participant(new_participant_id(base, rng), kind, footprint, track, Origin.ADDED)


def _accept(current: Scenario, participants: Sequence[Participant], cfg: MutationConfig) -> Optional[Scenario]:
    mutated = current.with_participants(participants)
    violations = scenario_violations(mutated, cfg.ego_footprint.to_footprint())
    if violations:
        logger.debug(f"Rejected mutation of {current.id}: {violations[0]}")
        return None
    return mutated


def mutate_add(
    seed_obs: Observation,
    current: Scenario,
    current_obs: Optional[Observation],
    cfg: MutationConfig,
    rng: np.random.Generator,
    *,
    road_map: RoadMap,
) -> MutationOutcome:
    """
    Add one participant that stays clear of the seed's optimal path and of every
    other participant, window by window.

    Raises:
        SaturatedError: If ``current`` already holds ``cfg.max_added`` added participants.
    """
    if len(current.added) >= cfg.max_added:
        raise SaturatedError(len(current.added), cfg.max_added)
    participant = _add_participant(seed_obs, current, current_obs, cfg, rng, road_map)
    if participant is None:
        return MutationOutcome.abort(current, MutationOp.ADD, "empty feasible area")
    mutated = _accept(current, current.participants + (participant,), cfg)
    if mutated is None:
        return MutationOutcome.abort(current, MutationOp.ADD, "invariant check failed")
    return MutationOutcome(mutated, MutationOp.ADD, False)


def removable(current: Scenario, seed: Optional[Scenario] = None) -> List[Participant]:
    """Participants of ``current`` that the seed does not have."""
    seed_ids: Set[str] = {p.id for p in seed.participants} if seed is not None else set()
    return [p for p in current.participants if p.origin == Origin.ADDED and p.id not in seed_ids]


def mutate_remove(seed: Optional[Scenario], current: Scenario, rng: np.random.Generator) -> MutationOutcome:
    """Drop one uniformly chosen added participant; seed participants are never touched."""
    candidates = removable(current, seed)
    if not candidates:
        return MutationOutcome.abort(current, MutationOp.REMOVE, "no added participants")
    victim = candidates[int(rng.integers(len(candidates)))]
    remaining = tuple(p for p in current.participants if p.id != victim.id)
    return MutationOutcome(current.with_participants(remaining), MutationOp.REMOVE, False)


def mutate_change(
    seed_obs: Observation,
    current: Scenario,
    current_obs: Optional[Observation],
    cfg: MutationConfig,
    rng: np.random.Generator,
    *,
    road_map: RoadMap,
    seed: Optional[Scenario] = None,
) -> MutationOutcome:
    """Replace one added participant; the removed one no longer constrains the new one."""
    candidates = removable(current, seed)
    if not candidates:
        return MutationOutcome.abort(current, MutationOp.CHANGE, "no added participants")
    victim = candidates[int(rng.integers(len(candidates)))]
    base = current.with_participants(p for p in current.participants if p.id != victim.id)
    obs = current_obs.without(victim.id) if current_obs is not None else None
    participant = _add_participant(seed_obs, base, obs, cfg, rng, road_map)
    if participant is None:
        return MutationOutcome.abort(current, MutationOp.CHANGE, "empty feasible area")
    mutated = _accept(current, base.participants + (participant,), cfg)
    if mutated is None:
        return MutationOutcome.abort(current, MutationOp.CHANGE, "invariant check failed")
    return MutationOutcome(mutated, MutationOp.CHANGE, False)


def mutate(
    seed_obs: Observation,
    current: Scenario,
    current_obs: Optional[Observation],
    cfg: MutationConfig,
    rng: np.random.Generator,
    *,
    road_map: RoadMap,
    seed: Optional[Scenario] = None,
) -> MutationOutcome:
    """
    Apply one operator drawn by ``cfg.op_weights``.

    A saturated or aborted operator is excluded and another one drawn, up to
    ``cfg.retry_budget`` attempts.
    """
    tried: Set[MutationOp] = set()
    last_op = MutationOp.ADD
    reason = "no operator available"
    for _ in range(cfg.retry_budget):
        available = [op for op in MutationOp if cfg.op_weights.get(op, 0.0) > 0 and op not in tried]
        if not available:
            break
        weights = np.array([cfg.op_weights[op] for op in available], dtype=float)
        op = available[int(rng.choice(len(available), p=weights / weights.sum()))]
        last_op = op
        try:
            if op == MutationOp.ADD:
                outcome = mutate_add(seed_obs, current, current_obs, cfg, rng, road_map=road_map)
            elif op == MutationOp.REMOVE:
                outcome = mutate_remove(seed, current, rng)
            else:
                outcome = mutate_change(seed_obs, current, current_obs, cfg, rng, road_map=road_map, seed=seed)
        except SaturatedError as e:
            logger.debug(e.message)
            reason = "saturated"
            tried.add(op)
            continue
        if not outcome.aborted:
            return outcome
        reason = outcome.reason or "aborted"
        tried.add(op)
    return MutationOutcome(current, last_op, True, reason)


__all__ = [
    "MutationOutcome",
    "mutate",
    "mutate_add",
    "mutate_change",
    "mutate_remove",
    "mutation_windows",
    "new_participant_id",
    "npc_track",
    "removable",
]
