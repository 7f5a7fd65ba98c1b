"""Pure-pursuit steering and proportional speed control."""

import math
from typing import Optional

from ..config.schema import VehicleParams
from ..geometry import angle_diff
from ..scenario import Waypoint
from .kinematics import Command
from .planner.base import PlannedPath


class PurePursuitTracker:
    """
    Turns a planned path into per-step commands.

    The lookahead point is the first path point at least
    ``lookahead_min + lookahead_gain * v`` from the ego, searched forward from the
    point nearest the ego. Target speed is the planned speed at that nearest point.
    """

    def __init__(self, vehicle: Optional[VehicleParams] = None):
        self.vehicle = vehicle or VehicleParams()

    def brake(self) -> Command:
        return Command(accel=-self.vehicle.decel_max, steer=0.0)

    def command(self, state: Waypoint, path: PlannedPath, sim_dt: float) -> Command:
        vp = self.vehicle
        ex, ey = state.position.x, state.position.y
        dists = [math.hypot(p.x - ex, p.y - ey) for p in path.points]
        nearest = min(range(len(dists)), key=dists.__getitem__)

        lookahead = vp.lookahead_min + vp.lookahead_gain * state.v
        target = path.points[-1]
        for p, d in zip(path.points[nearest:], dists[nearest:]):
            if d >= lookahead:
                target = p
                break

        distance = math.hypot(target.x - ex, target.y - ey)
        if distance < 1e-6:
            steer = 0.0
        else:
            alpha = angle_diff(math.atan2(target.y - ey, target.x - ex), state.heading)
            steer = math.atan2(2.0 * vp.wheelbase * math.sin(alpha), distance)
        steer = max(-vp.steer_max, min(vp.steer_max, steer))

        v_target = min(path.speeds[nearest], vp.speed_max)
        accel = vp.speed_gain * (v_target - state.v)
        accel = max(-vp.decel_max, min(vp.accel_max, accel))
        # never exceed speed_max after the step
        accel = min(accel, (vp.speed_max - state.v) / sim_dt)
        return Command(accel=accel, steer=steer)


__all__ = ["PurePursuitTracker"]
