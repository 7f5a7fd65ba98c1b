"""Open-loop replay of the seed's recorded ego path through a mutated scenario."""

import math
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from ..config.schema import SimConfig
from ..core.types import Origin
from ..geometry import Footprint, Point2
from ..internal.utils import get_logger
from ..scenario import EGO_ID, DrivingPath, RoadMap, Scenario, Scene, Waypoint
from .collision import collision_check, ego_clearance
from .loop import checked_sim_config

logger = get_logger(__name__)

MIN_CLEARANCE = 0.5


@dataclass(frozen=True)
class ReplayReport:
    """Why a replay passed or failed; ``passed`` is what ``replay_validation`` returns."""

    passed: bool
    reached_goal: bool
    collision: Optional[Tuple[str, str]] = None
    tight_participant: Optional[str] = None
    min_clearance: float = math.inf
    failed_at: Optional[float] = None


def _replayed_ego(path: DrivingPath, sim_dt: float, start_heading: float) -> List[Waypoint]:
    times = path.timestamps or tuple(i * sim_dt for i in range(len(path.points)))
    states: List[Waypoint] = []
    heading = start_heading
    for i, (t, p) in enumerate(zip(times, path.points)):
        nxt: Optional[Point2] = path.points[i + 1] if i + 1 < len(path.points) else None
        if nxt is not None and p.distance_to(nxt) > 1e-6:
            heading = p.bearing_to(nxt)
            v = p.distance_to(nxt) / max(times[i + 1] - t, 1e-9)
        else:
            v = 0.0
        states.append(Waypoint(t, p, heading, v, 0.0))
    return states


def replay_report(
    mutated: Scenario,
    original_path: DrivingPath,
    road_map: RoadMap,
    cfg: Union[SimConfig, Mapping[str, Any], None] = None,
    clearance: float = MIN_CLEARANCE,
) -> ReplayReport:
    """
    Drive the ego along ``original_path`` at its recorded timing, against the
    participants of ``mutated``.

    Added participants must keep ``clearance`` from the ego at every step. Seed
    participants keep the clearance the seed run achieved along this same path, so
    for them only a collision fails the replay.
    """
    cfg = checked_sim_config(cfg)
    footprints: Dict[str, Footprint] = {EGO_ID: cfg.vehicle.footprint}
    footprints.update({p.id: p.footprint for p in mutated.participants})
    added = [p for p in mutated.participants if p.origin == Origin.ADDED]
    ego_radius = cfg.vehicle.footprint.circumradius

    worst = math.inf
    for ego in _replayed_ego(original_path, cfg.sim_dt, mutated.task.start.heading):
        scene = Scene(ego.t, ego, {p.id: p.state_at(ego.t) for p in mutated.participants})
        pair = collision_check(scene, footprints)
        if pair is not None and EGO_ID in pair:
            return ReplayReport(False, False, collision=pair, min_clearance=0.0, failed_at=ego.t)
        for p in added:
            wp = scene.participants[p.id]
            reach = ego_radius + p.footprint.circumradius + clearance
            if ego.position.distance_to(wp.position) > reach:
                continue
            gap = ego_clearance(scene, footprints, p.id)
            worst = min(worst, gap)
            if gap < clearance:
                return ReplayReport(False, False, tight_participant=p.id, min_clearance=gap, failed_at=ego.t)

    reached = original_path.points[-1].distance_to(mutated.task.destination) <= mutated.task.goal_radius
    return ReplayReport(reached, reached, min_clearance=worst)


def replay_validation(
    mutated: Scenario,
    original_path: DrivingPath,
    road_map: RoadMap,
    cfg: Union[SimConfig, Mapping[str, Any], None] = None,
) -> bool:
    """True iff the seed's optimal path is still traversable in ``mutated``."""
    report = replay_report(mutated, original_path, road_map, cfg)
    if not report.passed:
        logger.debug(
            f"Replay of {mutated.id} failed: collision={report.collision} "
            f"tight={report.tight_participant} at t={report.failed_at}"
        )
    return report.passed


__all__ = ["ReplayReport", "replay_report", "replay_validation", "MIN_CLEARANCE"]
