"""Immutable scenario, map and observation value types."""

import math
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
import shapely
from shapely.geometry import LineString

from ..core.exceptions import InvariantError
from ..core.types import Origin, ParticipantKind
from ..geometry import Footprint, Point2, Pose, Region, normalize_angle

EGO_ID = "ego"
DEFAULT_EGO_FOOTPRINT = Footprint(4.6, 2.1)


@dataclass(frozen=True, slots=True)
class Waypoint:
    """State of one participant at time ``t``: position, heading, speed and acceleration."""

    t: float
    position: Point2
    heading: float
    v: float
    a: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "heading", normalize_angle(self.heading))

    @property
    def pose(self) -> Pose:
        return Pose(self.position, self.heading)

    def at_time(self, t: float) -> "Waypoint":
        return replace(self, t=t)


@dataclass(frozen=True)
class Lane:
    id: str
    centerline: Tuple[Point2, ...]
    width: float
    successors: Tuple[str, ...] = ()
    left_neighbor: Optional[str] = None
    right_neighbor: Optional[str] = None

    @cached_property
    def line(self) -> LineString:
        return LineString([p.as_tuple() for p in self.centerline])

    @cached_property
    def area(self) -> shapely.Geometry:
        return self.line.buffer(0.5 * self.width, cap_style="round", join_style="round")

    def heading_at(self, p: Point2, ahead: float = 0.5) -> float:
        """Tangent direction of the centerline at the projection of ``p``."""
        s = self.line.project(shapely.Point(p.x, p.y))
        length = self.line.length
        s0, s1 = max(0.0, min(s, length - ahead)), min(length, max(s, 0.0) + ahead)
        if s1 - s0 < 1e-9:
            s0 = max(0.0, s1 - ahead)
        a = self.line.interpolate(s0)
        b = self.line.interpolate(s1)
        return math.atan2(b.y - a.y, b.x - a.x)


@dataclass(frozen=True)
class RoadMap:
    """Lanes of a synthetic road network; the drivable area is the union of lane bands."""

    id: str
    lanes: Tuple[Lane, ...]

    @cached_property
    def _by_id(self) -> Dict[str, Lane]:
        return {lane.id: lane for lane in self.lanes}

    def lane(self, lane_id: str) -> Optional[Lane]:
        return self._by_id.get(lane_id)

    @cached_property
    def drivable(self) -> Region:
        return Region.from_geometry(shapely.union_all([lane.area for lane in self.lanes]))

    @property
    def bounds(self) -> Tuple[float, float, float, float]:
        return self.drivable.bounds

    @property
    def origin(self) -> Point2:
        """Bounding-box minimum of the drivable area."""
        minx, miny, _, _ = self.bounds
        return Point2(minx, miny)

    def nearest_lane(self, p: Point2) -> Lane:
        point = shapely.Point(p.x, p.y)
        return min(self.lanes, key=lambda lane: (lane.line.distance(point), lane.id))

    def lane_heading(self, p: Point2) -> float:
        return self.nearest_lane(p).heading_at(p)


@dataclass(frozen=True)
class MotionTask:
    start: Pose
    destination: Point2
    goal_radius: float
    time_limit: float


@dataclass(frozen=True)
class Participant:
    """A static obstacle or scripted NPC vehicle; ``origin`` tells seed from mutation-added."""

    id: str
    kind: ParticipantKind
    footprint: Footprint
    trajectory: Tuple[Waypoint, ...]
    origin: Origin = Origin.SEED

    @property
    def is_static(self) -> bool:
        return self.kind == ParticipantKind.STATIC_OBSTACLE

    @property
    def initial(self) -> Waypoint:
        return self.trajectory[0]

    def state_at(self, t: float) -> Waypoint:
        """Linear interpolation between authored waypoints, clamped at both ends."""
        track = self.trajectory
        if len(track) == 1 or t <= track[0].t:
            return track[0].at_time(t)
        if t >= track[-1].t:
            return track[-1].at_time(t)
        lo, hi = 0, len(track) - 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if track[mid].t <= t:
                lo = mid
            else:
                hi = mid
        w0, w1 = track[lo], track[hi]
        u = (t - w0.t) / (w1.t - w0.t)
        x = w0.position.x + u * (w1.position.x - w0.position.x)
        y = w0.position.y + u * (w1.position.y - w0.position.y)
        heading = w0.heading + u * normalize_angle(w1.heading - w0.heading)
        return Waypoint(t, Point2(x, y), heading, w0.v + u * (w1.v - w0.v), w0.a + u * (w1.a - w0.a))


@dataclass(frozen=True)
class Scenario:
    """A motion task plus the participants sharing the road with the ego vehicle."""

    id: str
    map_id: str
    task: MotionTask
    participants: Tuple[Participant, ...] = ()

    def participant(self, participant_id: str) -> Optional[Participant]:
        return next((p for p in self.participants if p.id == participant_id), None)

    @property
    def added(self) -> Tuple[Participant, ...]:
        return tuple(p for p in self.participants if p.origin == Origin.ADDED)

    def with_participants(self, participants: Iterable[Participant], scenario_id: Optional[str] = None) -> "Scenario":
        return replace(self, participants=tuple(participants), id=scenario_id or self.id)

    def renamed(self, scenario_id: str) -> "Scenario":
        return replace(self, id=scenario_id)

    def canonical_key(self) -> Tuple[Tuple[str, str, Tuple[Tuple[float, ...], ...]], ...]:
        """Participant content with ids and ordering stripped, for duplicate detection."""
        rows = []
        for p in self.participants:
            track = tuple((w.t, w.position.x, w.position.y, w.heading) for w in p.trajectory)
            rows.append((p.kind.value, f"{p.footprint.length}x{p.footprint.width}", track))
        return tuple(sorted(rows))


@dataclass(frozen=True, slots=True)
class Scene:
    t: float
    ego: Waypoint
    participants: Mapping[str, Waypoint] = field(default_factory=dict)

    def get(self, participant_id: str) -> Optional[Waypoint]:
        if participant_id == EGO_ID:
            return self.ego
        return self.participants.get(participant_id)


@dataclass(frozen=True)
class Observation:
    """Scenes sampled every ``dt`` seconds from ``t = 0``."""

    dt: float
    scenes: Tuple[Scene, ...]

    def __post_init__(self) -> None:
        if len(self.scenes) < 2:
            raise InvariantError([f"observation needs at least 2 scenes, got {len(self.scenes)}"])

    @property
    def duration(self) -> float:
        return self.scenes[-1].t

    def index_at(self, t: float) -> int:
        """Index of the last scene at or before ``t``, clamped to the observation."""
        idx = int(math.floor(t / self.dt + 1e-9))
        return max(0, min(idx, len(self.scenes) - 1))

    def ego_at(self, t: float) -> Waypoint:
        return self.scenes[self.index_at(t)].ego

    def segment(self, participant_id: str, t0: float, t1: float) -> List[Pose]:
        """Poses of one participant for scenes in ``[t0, t1]``; empty if it is absent."""
        lo, hi = self.index_at(t0), self.index_at(t1)
        poses: List[Pose] = []
        for scene in self.scenes[lo : hi + 1]:
            wp = scene.get(participant_id)
            if wp is not None:
                poses.append(wp.pose)
        return poses

    @cached_property
    def participant_ids(self) -> Tuple[str, ...]:
        seen: Dict[str, None] = {}
        for scene in self.scenes:
            for pid in scene.participants:
                seen.setdefault(pid, None)
        return tuple(seen)

    def without(self, participant_id: str) -> "Observation":
        scenes = tuple(
            Scene(s.t, s.ego, {k: v for k, v in s.participants.items() if k != participant_id}) for s in self.scenes
        )
        return Observation(self.dt, scenes)


@dataclass(frozen=True)
class DrivingPath:
    """Ordered ego positions; ``timestamps`` is set when the path comes from an observation."""

    points: Tuple[Point2, ...]
    timestamps: Optional[Tuple[float, ...]] = None

    def __post_init__(self) -> None:
        violations = []
        if len(self.points) < 2:
            violations.append(f"driving path needs at least 2 points, got {len(self.points)}")
        if self.timestamps is not None and len(self.timestamps) != len(self.points):
            violations.append("driving path timestamps must match its points")
        if violations:
            raise InvariantError(violations)

    def __len__(self) -> int:
        return len(self.points)

    def as_array(self) -> np.ndarray:
        return np.array([(p.x, p.y) for p in self.points], dtype=float)

    @property
    def length(self) -> float:
        arr = self.as_array()
        return float(np.sum(np.hypot(*np.diff(arr, axis=0).T)))


PathLike = Union[DrivingPath, Sequence[Point2], Sequence[Tuple[float, float]], np.ndarray]


def path_array(path: PathLike) -> np.ndarray:
    """Coordinates of any path-like input as an ``(n, 2)`` float array."""
    if isinstance(path, DrivingPath):
        return path.as_array()
    if isinstance(path, np.ndarray):
        return np.asarray(path, dtype=float).reshape(-1, 2)
    return np.array([(p.x, p.y) if isinstance(p, Point2) else (p[0], p[1]) for p in path], dtype=float).reshape(-1, 2)


def ego_path(observation: Observation) -> DrivingPath:
    """Ego positions of every scene, in time order."""
    return DrivingPath(
        points=tuple(scene.ego.position for scene in observation.scenes),
        timestamps=tuple(scene.t for scene in observation.scenes),
    )


__all__ = [
    "EGO_ID",
    "DEFAULT_EGO_FOOTPRINT",
    "Waypoint",
    "Lane",
    "RoadMap",
    "MotionTask",
    "Participant",
    "Scenario",
    "Scene",
    "Observation",
    "DrivingPath",
    "PathLike",
    "path_array",
    "ego_path",
]
