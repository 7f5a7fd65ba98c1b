"""Non-invasive feasible areas: where a new participant may be during one window."""

import math
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence

import shapely
from shapely.geometry.base import BaseGeometry

from ..config.schema import MutationConfig
from ..geometry import Footprint, Pose, Region, region_difference, region_intersection, sector_from_state
from ..geometry.shapes import swept_geometry
from ..scenario import Observation, Participant, RoadMap, Scenario, Scene, Waypoint


def participant_segment(participant: Participant, t0: float, t1: float, step: float) -> List[Pose]:
    """Poses of a scripted participant sampled every ``step`` over ``[t0, t1]``."""
    if participant.is_static:
        return [participant.initial.pose]
    count = max(1, int(math.ceil((t1 - t0) / step - 1e-9)))
    return [participant.state_at(min(t1, t0 + i * step)).pose for i in range(count + 1)]


def covering_observation(seed_obs: Observation, current: Scenario, current_obs: Optional[Observation]) -> Observation:
    """
    Scenes at the seed observation's times holding the seed ego and ``current``'s participants.

    Participant states come from ``current_obs`` where it reaches and from the
    scripted trajectories past its end.
    """
    scenes = []
    for scene in seed_obs.scenes:
        source = None
        if current_obs is not None and scene.t <= current_obs.duration + 1e-9:
            source = current_obs.scenes[current_obs.index_at(scene.t)]
        participants: Dict[str, Waypoint] = {}
        for p in current.participants:
            wp = source.participants.get(p.id) if source is not None else None
            participants[p.id] = wp if wp is not None else p.state_at(scene.t)
        scenes.append(Scene(scene.t, scene.ego, participants))
    return Observation(seed_obs.dt, tuple(scenes))


@dataclass(frozen=True)
class WindowObstacles:
    """
    Swept regions of one window a new participant must stay clear of.

    ``ego`` is the optimal-path sweep grown by the mutation clearance; ``others``
    are the exact sweeps of every other participant.
    """

    t0: float
    t1: float
    ego: Optional[BaseGeometry]
    others: Sequence[BaseGeometry]

    def geometries(self) -> List[BaseGeometry]:
        return ([self.ego] if self.ego is not None else []) + list(self.others)

    def admits(self, candidate: BaseGeometry) -> bool:
        return not any(candidate.intersects(g) for g in self.geometries())

    def blocked(self, margin: float) -> Region:
        """Union of every sweep grown by ``margin``, as a region."""
        geoms = self.geometries()
        if not geoms:
            return Region.empty()
        union = shapely.union_all(geoms)
        if margin > 0:
            union = union.buffer(margin, join_style="mitre")
        return Region.from_geometry(union)


def window_obstacles(
    optimal_path_segment: Sequence[Pose],
    observation: Observation,
    already_added: Sequence[Participant],
    cfg: MutationConfig,
    t0: float,
    t1: float,
    footprints: Optional[Mapping[str, Footprint]] = None,
) -> WindowObstacles:
    """
    Sweeps over ``[t0, t1]`` of the ego's optimal path, of every participant in
    ``observation`` and of ``already_added`` participants the observation lacks.

    Observed participants without an entry in ``footprints`` are given the NPC
    footprint of ``cfg``.
    """
    footprints = dict(footprints or {})
    footprints.update({p.id: p.footprint for p in already_added})
    npc = cfg.npc_footprint.to_footprint()

    ego = swept_geometry(optimal_path_segment, cfg.ego_footprint.to_footprint(), cfg.clearance)
    others = []
    for pid in observation.participant_ids:
        geom = swept_geometry(observation.segment(pid, t0, t1), footprints.get(pid, npc))
        if geom is not None:
            others.append(geom)
    seen = set(observation.participant_ids)
    for p in already_added:
        if p.id not in seen:
            geom = swept_geometry(participant_segment(p, t0, t1, observation.dt), p.footprint)
            if geom is not None:
                others.append(geom)

    for geom in others + ([ego] if ego is not None else []):
        shapely.prepare(geom)
    return WindowObstacles(t0, t1, ego, tuple(others))


def free_area(
    obstacles: WindowObstacles,
    footprint: Footprint,
    road_map: Optional[RoadMap] = None,
    within: Optional[Region] = None,
    inflation: Optional[float] = None,
) -> Region:
    """
    Centers a ``footprint`` could take without touching ``obstacles``.

    The sweeps are grown by half the footprint width (or ``inflation`` when
    given) and subtracted from ``within``, clipped to the drivable area when a map
    is supplied. Exact footprint checks still follow every sample.
    """
    margin = 0.5 * footprint.width if inflation is None else inflation
    parts = [r for r in (within, road_map.drivable if road_map is not None else None) if r is not None]
    if not parts:
        raise ValueError("free_area needs a map or a region to work within")
    base = region_intersection(parts) if len(parts) > 1 else parts[0]
    return region_difference(base, obstacles.blocked(margin))


def non_invasive_area(
    y_t: Waypoint,
    optimal_path_segment: Sequence[Pose],
    observation: Observation,
    already_added: Sequence[Participant],
    cfg: MutationConfig,
    *,
    road_map: Optional[RoadMap] = None,
    footprint: Optional[Footprint] = None,
    footprints: Optional[Mapping[str, Footprint]] = None,
    inflation: Optional[float] = None,
) -> Region:
    """
    Feasible area for the next waypoint of a participant currently at ``y_t``.

    The kinematic sector of ``y_t`` over ``cfg.delta_t`` minus the sweeps of the
    ego's optimal path and of every other participant over the same window. All
    subtrahends share the sector as minuend, so this equals the intersection of
    the per-participant feasible areas.
    """
    sector = sector_from_state(y_t.pose, cfg.npc_speed_max, cfg.npc_steer_max, cfg.delta_t)
    if sector.is_empty:
        return sector
    t0, t1 = y_t.t, y_t.t + cfg.delta_t
    obstacles = window_obstacles(optimal_path_segment, observation, already_added, cfg, t0, t1, footprints)
    fp = footprint or cfg.npc_footprint.to_footprint()
    return free_area(obstacles, fp, road_map=road_map, within=sector, inflation=inflation)


__all__ = [
    "WindowObstacles",
    "covering_observation",
    "free_area",
    "non_invasive_area",
    "participant_segment",
    "window_obstacles",
]
