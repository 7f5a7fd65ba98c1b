"""Scripted participant playback and constant-velocity prediction."""

import math
from typing import Tuple

from ..geometry import Point2
from ..scenario import Participant, Waypoint


def replay_npc(participant: Participant, t: float) -> Waypoint:
    """State of a scripted participant at ``t``, interpolated and clamped to its trajectory."""
    return participant.state_at(t)


def predict_constant_velocity(state: Waypoint, horizon: float, step: float) -> Tuple[Waypoint, ...]:
    """Future states at ``step`` intervals up to ``horizon``, holding speed and heading."""
    if horizon <= 0 or state.v <= 0:
        return ()
    count = int(math.floor(horizon / step + 1e-9))
    c, s = math.cos(state.heading), math.sin(state.heading)
    out = []
    for k in range(1, count + 1):
        dt = k * step
        out.append(
            Waypoint(
                t=state.t + dt,
                position=Point2(state.position.x + state.v * c * dt, state.position.y + state.v * s * dt),
                heading=state.heading,
                v=state.v,
                a=0.0,
            )
        )
    return tuple(out)


__all__ = ["replay_npc", "predict_constant_velocity"]
