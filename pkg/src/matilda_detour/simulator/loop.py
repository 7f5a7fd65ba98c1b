"""Closed-loop simulation: planner in the loop, scripted participants replayed."""

import math
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from ..config.schema import SimConfig, build_model
from ..core.exceptions import NoRouteError
from ..core.types import OutcomeStatus
from ..geometry import Footprint
from ..internal.utils import get_logger
from ..scenario import EGO_ID, Observation, RoadMap, Scenario, Scene, Waypoint
from .collision import collision_check
from .kinematics import Command, step_ego
from .planner.base import PlannedPath, Planner, WorldView
from .replay import predict_constant_velocity
from .tracking import PurePursuitTracker

logger = get_logger(__name__)


@dataclass(frozen=True)
class TaskOutcome:
    """How a simulation ended; ``collision_pair`` is set only for collisions."""

    status: OutcomeStatus
    elapsed: float
    collision_pair: Optional[Tuple[str, str]] = None

    @property
    def completed(self) -> bool:
        return self.status == OutcomeStatus.COMPLETED


def checked_sim_config(cfg: Union[SimConfig, Mapping[str, Any], None]) -> SimConfig:
    """Re-validate a SimConfig (or build one from a mapping); raises ConfigError."""
    if cfg is None:
        return SimConfig()
    data = dict(cfg) if isinstance(cfg, Mapping) else cfg.model_dump()
    return build_model(SimConfig, data, section="sim")


def _world_view(
    t: float,
    ego: Waypoint,
    participants: Dict[str, Waypoint],
    footprints: Mapping[str, Footprint],
    scenario: Scenario,
    road_map: RoadMap,
    cfg: SimConfig,
) -> WorldView:
    predicted = {
        pid: predict_constant_velocity(wp, cfg.prediction_horizon_s, cfg.prediction_step_s)
        for pid, wp in participants.items()
    }
    return WorldView(
        t=t,
        ego=ego,
        ego_footprint=footprints[EGO_ID],
        participants=participants,
        footprints={pid: fp for pid, fp in footprints.items() if pid != EGO_ID},
        road_map=road_map,
        destination=scenario.task.destination,
        goal_radius=scenario.task.goal_radius,
        predicted={pid: states for pid, states in predicted.items() if states},
    )


def simulate(
    scenario: Scenario,
    road_map: RoadMap,
    planner: Planner,
    cfg: Union[SimConfig, Mapping[str, Any], None] = None,
    rng_seed: int = 0,
) -> Tuple[Observation, TaskOutcome]:
    """
    Run one scenario to a terminal outcome.

    Every step records a scene, then checks collision, goal, stuck and timeout in
    that order. The planner is consulted every ``replan_period`` seconds; a
    ``NoRouteError`` makes the ego brake until the next replan. A run that ends on
    its first scene gets a second, unchanged scene so the observation stays valid.

    Raises:
        ConfigError: If ``cfg`` holds invalid values.
    """
    cfg = checked_sim_config(cfg)
    vehicle = cfg.vehicle
    dt = cfg.sim_dt
    task = scenario.task
    tracker = PurePursuitTracker(vehicle)
    footprints: Dict[str, Footprint] = {EGO_ID: vehicle.footprint}
    footprints.update({p.id: p.footprint for p in scenario.participants})

    planner.reset(road_map, rng_seed)
    replan_every = max(1, int(round(cfg.replan_period / dt)))
    stuck_steps = max(1, int(round(cfg.stuck_window_s / dt)))
    last_step = min(cfg.max_steps, int(math.ceil(task.time_limit / dt - 1e-9)))

    ego = Waypoint(0.0, task.start.position, task.start.heading, 0.0, 0.0)
    scenes: List[Scene] = []
    path: Optional[PlannedPath] = None
    outcome: Optional[TaskOutcome] = None
    step = 0
    while outcome is None:
        t = step * dt
        participants = {p.id: p.state_at(t) for p in scenario.participants}
        scene = Scene(t, ego, participants)
        scenes.append(scene)

        pair = collision_check(scene, footprints)
        if pair is not None:
            outcome = TaskOutcome(OutcomeStatus.COLLISION, t, pair)
            break
        if ego.position.distance_to(task.destination) <= task.goal_radius:
            outcome = TaskOutcome(OutcomeStatus.COMPLETED, t)
            break
        window_start = scenes[step - stuck_steps].ego.position if step >= stuck_steps else None
        if window_start is not None and window_start.distance_to(ego.position) < cfg.stuck_distance_m:
            outcome = TaskOutcome(OutcomeStatus.STUCK, t)
            break
        if step >= last_step:
            outcome = TaskOutcome(OutcomeStatus.TIMEOUT, t)
            break

        if step % replan_every == 0:
            view = _world_view(t, ego, participants, footprints, scenario, road_map, cfg)
            try:
                path = planner.plan(view)
            except NoRouteError as e:
                logger.debug(f"{scenario.id} t={t:.1f}: {e.message}")
                path = None
        command: Command = tracker.command(ego, path, dt) if path is not None else tracker.brake()
        ego = step_ego(ego, command, dt, vehicle.wheelbase).at_time((step + 1) * dt)
        step += 1

    if len(scenes) < 2:
        held = scenes[-1]
        scenes.append(Scene(dt, held.ego.at_time(dt), {p.id: p.state_at(dt) for p in scenario.participants}))
    logger.debug(f"{scenario.id}: {outcome.status.value} after {outcome.elapsed:.1f}s")
    return Observation(dt, tuple(scenes)), outcome


__all__ = ["TaskOutcome", "simulate", "checked_sim_config"]
