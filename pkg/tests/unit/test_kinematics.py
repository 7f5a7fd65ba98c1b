"""Tests for the bicycle model, per-scene collision checks, prediction and path tracking."""

import math

import pytest

from matilda_detour.config import VehicleParams
from matilda_detour.geometry import Footprint, Point2, angle_diff
from matilda_detour.scenario import Scene, Waypoint
from matilda_detour.simulator import (
    Command,
    PlannedPath,
    PurePursuitTracker,
    collision_check,
    ego_clearance,
    predict_constant_velocity,
    step_ego,
)

pytestmark = pytest.mark.unit

EGO = Footprint(4.6, 2.1)


def state(x=0.0, y=0.0, heading=0.0, v=0.0):
    return Waypoint(0.0, Point2(x, y), heading, v, 0.0)


def still(x, y, heading=0.0):
    return Waypoint(0.0, Point2(x, y), heading, 0.0, 0.0)


class TestStepEgo:
    def test_straight_line(self):
        nxt = step_ego(state(v=5.0), Command(), 0.1)
        assert nxt.position.x == pytest.approx(0.5)
        assert nxt.position.y == pytest.approx(0.0)
        assert nxt.t == pytest.approx(0.1)
        assert nxt.v == pytest.approx(5.0)

    def test_straight_line_matches_closed_form(self):
        v, dt, n = 5.0, 0.01, 1000
        x0, y0, theta0 = 1.0, -2.0, 0.3
        current = state(x0, y0, theta0, v)
        for _ in range(n):
            current = step_ego(current, Command(), dt)

        assert current.position.x == pytest.approx(x0 + n * v * dt * math.cos(theta0), abs=1e-9)
        assert current.position.y == pytest.approx(y0 + n * v * dt * math.sin(theta0), abs=1e-9)
        assert abs(angle_diff(current.heading, theta0)) < 1e-9
        assert current.v == v
        assert current.t == pytest.approx(n * dt, abs=1e-9)

    def test_position_uses_current_speed(self):
        nxt = step_ego(state(v=0.0), Command(accel=2.0), 0.5)
        assert nxt.position.x == 0.0
        assert nxt.v == pytest.approx(1.0)
        assert nxt.a == pytest.approx(2.0)

    def test_speed_is_floored_at_zero(self):
        nxt = step_ego(state(v=1.0), Command(accel=-5.0), 0.5)
        assert nxt.v == 0.0
        assert nxt.a == pytest.approx(-2.0)

    def test_braking_at_standstill_records_zero_accel(self):
        assert step_ego(state(), Command(accel=-4.0), 0.1).a == 0.0

    def test_constant_steer_matches_closed_form(self):
        """Euler steps on a constant turn sum to a closed-form chord series."""
        v, steer, dt, wheelbase, n = 5.0, 0.1, 0.01, 2.8, 1000
        x0, y0, theta0 = 1.0, -2.0, 0.3
        current = state(x0, y0, theta0, v)
        for _ in range(n):
            current = step_ego(current, Command(steer=steer), dt, wheelbase)

        d = v / wheelbase * math.tan(steer) * dt
        scale = v * dt * math.sin(n * d / 2) / math.sin(d / 2)
        mid = theta0 + (n - 1) * d / 2
        assert current.position.x == pytest.approx(x0 + scale * math.cos(mid), abs=1e-9)
        assert current.position.y == pytest.approx(y0 + scale * math.sin(mid), abs=1e-9)
        assert abs(angle_diff(current.heading, theta0 + n * d)) < 1e-9

    def test_heading_stays_normalized(self):
        current = state(v=8.0, heading=3.0)
        for _ in range(200):
            current = step_ego(current, Command(steer=0.5), 0.1)
            assert -math.pi < current.heading <= math.pi


class TestCollision:
    def test_no_participants(self):
        assert collision_check(Scene(0.0, still(0, 0)), {"ego": EGO}) is None

    def test_ego_pair_is_reported_first(self):
        scene = Scene(0.0, still(0, 0), {"b": still(1.0, 0), "a": still(30, 0), "c": still(30.5, 0)})
        footprints = {"ego": EGO, "a": Footprint(1, 1), "b": Footprint(1, 1), "c": Footprint(1, 1)}
        assert collision_check(scene, footprints) == ("ego", "b")

    def test_participant_pairs_in_id_order(self):
        scene = Scene(0.0, still(0, 0), {"b": still(30, 0), "a": still(30.5, 0)})
        footprints = {"ego": EGO, "a": Footprint(1, 1), "b": Footprint(1, 1)}
        assert collision_check(scene, footprints) == ("a", "b")

    def test_touching_is_not_a_collision(self):
        scene = Scene(0.0, still(0, 0), {"cone": still(2.6, 0)})
        footprints = {"ego": EGO, "cone": Footprint(0.6, 0.6)}
        assert collision_check(scene, footprints) is None

    def test_rotated_overlap(self):
        # 45-degree diamond whose left vertex sits inside the ego box
        scene = Scene(0.0, still(0, 0), {"npc": still(3.2, 1.0, math.pi / 4)})
        footprints = {"ego": EGO, "npc": Footprint(2.0, 2.0)}
        assert collision_check(scene, footprints) == ("ego", "npc")

    def test_clearance(self):
        scene = Scene(0.0, still(0, 0), {"cone": still(0, 2.0)})
        footprints = {"ego": EGO, "cone": Footprint(0.6, 0.6)}
        assert ego_clearance(scene, footprints, "cone") == pytest.approx(2.0 - 1.05 - 0.3)


class TestPrediction:
    def test_constant_velocity(self):
        states = predict_constant_velocity(state(0, 0, math.pi / 2, 4.0), horizon=2.0, step=0.5)
        assert len(states) == 4
        assert states[-1].t == pytest.approx(2.0)
        assert states[-1].position.x == pytest.approx(0.0, abs=1e-12)
        assert states[-1].position.y == pytest.approx(8.0)

    @pytest.mark.parametrize("v,horizon", [(0.0, 2.0), (3.0, 0.0)])
    def test_nothing_to_predict(self, v, horizon):
        assert predict_constant_velocity(state(v=v), horizon, 0.5) == ()


class TestPurePursuit:
    def test_accelerates_toward_planned_speed(self):
        path = PlannedPath((Point2(0, 0), Point2(10, 0), Point2(20, 0)), (8.0, 8.0, 0.0))
        command = PurePursuitTracker().command(state(), path, 0.1)
        assert command.accel == pytest.approx(VehicleParams().accel_max)
        assert command.steer == pytest.approx(0.0)

    def test_steers_toward_offset_path(self):
        path = PlannedPath((Point2(0, 0), Point2(5, 3), Point2(20, 3)), (5.0, 5.0, 0.0))
        command = PurePursuitTracker().command(state(v=2.0), path, 0.1)
        assert command.steer > 0

    def test_steer_is_clamped(self):
        # target straight to the left: unclamped pure pursuit asks for ~0.84 rad
        path = PlannedPath((Point2(0, 0), Point2(0, 5), Point2(0, 10)), (5.0, 5.0, 0.0))
        vehicle = VehicleParams()
        command = PurePursuitTracker(vehicle).command(state(v=1.0), path, 0.1)
        assert command.steer == pytest.approx(vehicle.steer_max)

    def test_never_exceeds_speed_max(self):
        vehicle = VehicleParams(speed_max=5.0)
        path = PlannedPath((Point2(0, 0), Point2(50, 0)), (30.0, 0.0))
        command = PurePursuitTracker(vehicle).command(state(v=4.95), path, 0.1)
        assert 4.95 + command.accel * 0.1 <= 5.0 + 1e-12

    def test_brake(self):
        assert PurePursuitTracker().brake() == Command(accel=-VehicleParams().decel_max, steer=0.0)
