"""Pydantic documents for the JSON scenario, map and observation formats.

Field names carry their SI unit; the documents convert to and from the immutable
value types in ``models``.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..core.types import Origin, ParticipantKind
from ..geometry import Footprint, Point2, Pose
from .models import Lane, MotionTask, Observation, Participant, RoadMap, Scenario, Scene, Waypoint


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid")


class PointDoc(_Document):
    x: float
    y: float

    @classmethod
    def of(cls, p: Point2) -> "PointDoc":
        return cls(x=p.x, y=p.y)

    def to_point(self) -> Point2:
        return Point2(self.x, self.y)


class PoseDoc(PointDoc):
    heading_rad: float


class FootprintDoc(_Document):
    length_m: float = Field(gt=0)
    width_m: float = Field(gt=0)


class WaypointDoc(_Document):
    t_s: float
    x: float
    y: float
    heading_rad: float
    v_mps: float
    a_mps2: float

    @classmethod
    def of(cls, w: Waypoint) -> "WaypointDoc":
        return cls(t_s=w.t, x=w.position.x, y=w.position.y, heading_rad=w.heading, v_mps=w.v, a_mps2=w.a)

    def to_waypoint(self) -> Waypoint:
        return Waypoint(self.t_s, Point2(self.x, self.y), self.heading_rad, self.v_mps, self.a_mps2)


class TaskDoc(_Document):
    start: PoseDoc
    destination: PointDoc
    goal_radius_m: float
    time_limit_s: float


class ParticipantDoc(_Document):
    id: str
    kind: ParticipantKind
    footprint: FootprintDoc
    origin: Origin = Origin.SEED
    trajectory: List[WaypointDoc] = Field(min_length=1)


class ScenarioDoc(_Document):
    id: str
    map_id: str
    task: TaskDoc
    participants: List[ParticipantDoc] = Field(default_factory=list)

    @classmethod
    def of(cls, s: Scenario) -> "ScenarioDoc":
        start = s.task.start
        return cls(
            id=s.id,
            map_id=s.map_id,
            task=TaskDoc(
                start=PoseDoc(x=start.position.x, y=start.position.y, heading_rad=start.heading),
                destination=PointDoc.of(s.task.destination),
                goal_radius_m=s.task.goal_radius,
                time_limit_s=s.task.time_limit,
            ),
            participants=[
                ParticipantDoc(
                    id=p.id,
                    kind=p.kind,
                    footprint=FootprintDoc(length_m=p.footprint.length, width_m=p.footprint.width),
                    origin=p.origin,
                    trajectory=[WaypointDoc.of(w) for w in p.trajectory],
                )
                for p in s.participants
            ],
        )

    def to_scenario(self) -> Scenario:
        task = MotionTask(
            start=Pose(self.task.start.to_point(), self.task.start.heading_rad),
            destination=self.task.destination.to_point(),
            goal_radius=self.task.goal_radius_m,
            time_limit=self.task.time_limit_s,
        )
        participants = tuple(
            Participant(
                id=p.id,
                kind=p.kind,
                footprint=Footprint(p.footprint.length_m, p.footprint.width_m),
                trajectory=tuple(w.to_waypoint() for w in p.trajectory),
                origin=p.origin,
            )
            for p in self.participants
        )
        return Scenario(id=self.id, map_id=self.map_id, task=task, participants=participants)


class LaneDoc(_Document):
    id: str
    centerline: List[PointDoc]
    width_m: float
    successors: List[str] = Field(default_factory=list)
    left_neighbor: Optional[str] = None
    right_neighbor: Optional[str] = None


class MapDoc(_Document):
    id: str
    lanes: List[LaneDoc]

    @classmethod
    def of(cls, m: RoadMap) -> "MapDoc":
        return cls(
            id=m.id,
            lanes=[
                LaneDoc(
                    id=lane.id,
                    centerline=[PointDoc.of(p) for p in lane.centerline],
                    width_m=lane.width,
                    successors=list(lane.successors),
                    left_neighbor=lane.left_neighbor,
                    right_neighbor=lane.right_neighbor,
                )
                for lane in m.lanes
            ],
        )

    def to_map(self) -> RoadMap:
        lanes = tuple(
            Lane(
                id=lane.id,
                centerline=tuple(p.to_point() for p in lane.centerline),
                width=lane.width_m,
                successors=tuple(lane.successors),
                left_neighbor=lane.left_neighbor,
                right_neighbor=lane.right_neighbor,
            )
            for lane in self.lanes
        )
        return RoadMap(id=self.id, lanes=lanes)


class SceneDoc(_Document):
    t_s: float
    ego: WaypointDoc
    participants: Dict[str, WaypointDoc] = Field(default_factory=dict)


class ObservationDoc(_Document):
    dt_s: float = Field(gt=0)
    scenes: List[SceneDoc]

    @classmethod
    def of(cls, o: Observation) -> "ObservationDoc":
        return cls(
            dt_s=o.dt,
            scenes=[
                SceneDoc(
                    t_s=s.t,
                    ego=WaypointDoc.of(s.ego),
                    participants={pid: WaypointDoc.of(w) for pid, w in s.participants.items()},
                )
                for s in o.scenes
            ],
        )

    def to_observation(self) -> Observation:
        scenes = tuple(
            Scene(
                t=s.t_s,
                ego=s.ego.to_waypoint(),
                participants={pid: w.to_waypoint() for pid, w in s.participants.items()},
            )
            for s in self.scenes
        )
        return Observation(dt=self.dt_s, scenes=scenes)


__all__ = [
    "PointDoc",
    "PoseDoc",
    "FootprintDoc",
    "WaypointDoc",
    "TaskDoc",
    "ParticipantDoc",
    "ScenarioDoc",
    "LaneDoc",
    "MapDoc",
    "SceneDoc",
    "ObservationDoc",
]
