"""Kinematic bicycle model for the ego vehicle."""

import math
from dataclasses import dataclass

from ..geometry import Point2
from ..scenario import Waypoint

DEFAULT_WHEELBASE = 2.8


@dataclass(frozen=True, slots=True)
class Command:
    """Longitudinal acceleration (m/s^2) and front-wheel steering angle (rad)."""

    accel: float = 0.0
    steer: float = 0.0


def step_ego(state: Waypoint, command: Command, sim_dt: float, wheelbase: float = DEFAULT_WHEELBASE) -> Waypoint:
    """
    Advance the ego state by one step.

    Position and heading integrate the current speed; the speed then takes the
    commanded acceleration and is floored at zero. The stored acceleration is the
    one actually realised, so a braking command at standstill records 0.
    """
    v = state.v
    theta = state.heading
    x = state.position.x + v * math.cos(theta) * sim_dt
    y = state.position.y + v * math.sin(theta) * sim_dt
    heading = theta + (v / wheelbase) * math.tan(command.steer) * sim_dt
    v_next = max(0.0, v + command.accel * sim_dt)
    return Waypoint(
        t=state.t + sim_dt,
        position=Point2(x, y),
        heading=heading,
        v=v_next,
        a=(v_next - v) / sim_dt,
    )


__all__ = ["Command", "step_ego", "DEFAULT_WHEELBASE"]
