"""Tests for the scenario data model, its JSON documents and the bundled corpus."""

import json

import pytest

from matilda_detour.core.exceptions import InvariantError, ScenarioLoadError, SchemaError
from matilda_detour.core.types import Origin, ParticipantKind
from matilda_detour.geometry import Footprint, Point2
from matilda_detour.scenario import (
    DrivingPath,
    Observation,
    Participant,
    Waypoint,
    corpus_seed_ids,
    ego_path,
    load_corpus_seed,
    load_map,
    load_observation,
    load_scenario,
    path_array,
    read_scenario,
    save_map,
    save_observation,
    save_scenario,
    validate_scenario,
    write_scenario,
)
from tests.utils import cruising_observation, npc_vehicle, static_obstacle, straight_scenario

pytestmark = pytest.mark.unit


def rules(violations):
    return {v.rule for v in violations}


class TestParticipant:
    def test_state_at_interpolates(self):
        npc = npc_vehicle("npc", 0.0, 0.0, speed=4.0, duration=3.0)
        state = npc.state_at(1.5)
        assert state.t == 1.5
        assert state.position.x == pytest.approx(6.0)
        assert state.v == pytest.approx(4.0)

    def test_state_at_clamps_both_ends(self):
        npc = npc_vehicle("npc", 0.0, 0.0, speed=4.0, duration=3.0)
        assert npc.state_at(-1.0).position.x == pytest.approx(0.0)
        assert npc.state_at(10.0).position.x == pytest.approx(12.0)
        assert npc.state_at(10.0).t == 10.0

    def test_static_obstacle_never_moves(self):
        cone = static_obstacle("cone", 5.0, 1.0)
        assert cone.is_static
        assert cone.state_at(7.0).position == Point2(5.0, 1.0)


class TestScenario:
    def test_added_filters_by_origin(self):
        scn = straight_scenario(
            [static_obstacle("a", 20, 0), static_obstacle("b", 25, 3.5, origin=Origin.ADDED)]
        )
        assert [p.id for p in scn.added] == ["b"]

    def test_with_participants_keeps_task(self):
        scn = straight_scenario()
        grown = scn.with_participants([static_obstacle("a", 20, 0)], scenario_id="grown")
        assert grown.id == "grown"
        assert grown.task == scn.task
        assert scn.participants == ()

    def test_canonical_key_ignores_ids_and_order(self):
        a = straight_scenario([static_obstacle("x", 20, 0), static_obstacle("y", 30, 3.5)])
        b = straight_scenario([static_obstacle("q", 30, 3.5), static_obstacle("p", 20, 0)], scenario_id="other")
        assert a.canonical_key() == b.canonical_key()
        c = straight_scenario([static_obstacle("x", 21, 0), static_obstacle("y", 30, 3.5)])
        assert a.canonical_key() != c.canonical_key()

    def test_canonical_key_covers_the_whole_track(self):
        # same initial pose, different motion afterwards
        slow = straight_scenario([npc_vehicle("npc", 10.0, 3.5, speed=2.0, duration=4.0)])
        fast = straight_scenario([npc_vehicle("npc", 10.0, 3.5, speed=6.0, duration=4.0)])
        assert slow.participants[0].trajectory[0].position == fast.participants[0].trajectory[0].position
        assert slow.canonical_key() != fast.canonical_key()

    def test_canonical_key_covers_the_footprint(self):
        small = straight_scenario([static_obstacle("cone", 20.0, 0.0)])
        large = straight_scenario([static_obstacle("cone", 20.0, 0.0, length=2.0, width=2.0)])
        assert small.canonical_key() != large.canonical_key()


class TestObservation:
    def test_needs_two_scenes(self):
        single = cruising_observation().scenes[:1]
        with pytest.raises(InvariantError):
            Observation(0.1, single)

    def test_index_and_segment(self):
        obs = cruising_observation(speed=5.0, duration=4.0)
        assert obs.duration == pytest.approx(4.0)
        assert obs.index_at(1.0) == 10
        assert obs.index_at(-3.0) == 0
        assert obs.index_at(99.0) == len(obs.scenes) - 1
        poses = obs.segment("ego", 1.0, 2.0)
        assert len(poses) == 11
        assert poses[0].position.x == pytest.approx(7.0)
        assert poses[-1].position.x == pytest.approx(12.0)

    def test_segment_of_absent_participant_is_empty(self):
        assert cruising_observation().segment("nobody", 0.0, 1.0) == []

    def test_without_drops_participant(self, empty_seed_run):
        obs, _ = empty_seed_run
        assert obs.participant_ids == ()
        assert obs.without("anything").scenes[0].ego == obs.scenes[0].ego


class TestDrivingPath:
    def test_length(self):
        path = DrivingPath((Point2(0, 0), Point2(3, 4), Point2(3, 10)))
        assert path.length == pytest.approx(11.0)

    def test_needs_two_points(self):
        with pytest.raises(InvariantError):
            DrivingPath((Point2(0, 0),))

    def test_timestamps_must_match(self):
        with pytest.raises(InvariantError):
            DrivingPath((Point2(0, 0), Point2(1, 0)), timestamps=(0.0,))

    def test_ego_path_carries_timestamps(self):
        obs = cruising_observation(duration=1.0)
        path = ego_path(obs)
        assert len(path) == 11
        assert path.timestamps[-1] == pytest.approx(1.0)

    def test_path_array_accepts_tuples_and_points(self):
        assert path_array([(0, 0), (1, 2)]).shape == (2, 2)
        assert path_array([Point2(0, 0), Point2(1, 2)])[1, 1] == 2.0


class TestValidation:
    def test_valid_seed(self, road):
        scn = straight_scenario([static_obstacle("cone", 20, 3.5), npc_vehicle("npc", 10, 3.5, 3.0, 5.0)])
        assert validate_scenario(scn, road) == []

    def test_overlap_at_start(self, road):
        scn = straight_scenario([static_obstacle("a", 20, 0), static_obstacle("b", 20.2, 0)])
        assert "overlap_t0" in rules(validate_scenario(scn, road))

    def test_overlap_with_ego_start(self, road):
        scn = straight_scenario([static_obstacle("a", 3, 0)])
        assert "overlap_ego_t0" in rules(validate_scenario(scn, road))

    def test_off_map_participant(self, road):
        scn = straight_scenario([static_obstacle("a", 20, 30)])
        violations = validate_scenario(scn, road)
        assert any(v.rule == "on_map" and v.subject == "a" for v in violations)

    def test_wrong_map(self, road):
        scn = straight_scenario(map_id="elsewhere")
        assert "map_id" in rules(validate_scenario(scn, road))

    def test_duplicate_and_reserved_ids(self, road):
        scn = straight_scenario([static_obstacle("ego", 20, 0), static_obstacle("c", 30, 0), static_obstacle("c", 40, 0)])
        found = rules(validate_scenario(scn, road))
        assert {"reserved_id", "unique_id"} <= found

    def test_non_uniform_timestamps(self, road):
        track = (
            Waypoint(0.0, Point2(10, 3.5), 0.0, 1.0, 0.0),
            Waypoint(1.0, Point2(11, 3.5), 0.0, 1.0, 0.0),
            Waypoint(3.0, Point2(13, 3.5), 0.0, 1.0, 0.0),
        )
        npc = Participant("npc", ParticipantKind.NPC_VEHICLE, Footprint(4.5, 1.9), track)
        assert "timestamps" in rules(validate_scenario(straight_scenario([npc]), road))

    def test_moving_static_obstacle(self, road):
        cone = Participant(
            "cone",
            ParticipantKind.STATIC_OBSTACLE,
            Footprint(0.6, 0.6),
            (Waypoint(0.0, Point2(20, 0), 0.0, 1.0, 0.0),),
        )
        assert "static_track" in rules(validate_scenario(straight_scenario([cone]), road))


class TestDocuments:
    def test_scenario_survives_save_and_load(self):
        scn = straight_scenario([static_obstacle("cone", 20, 3.5), npc_vehicle("npc", 10, 3.5, 3.0, 5.0)])
        assert load_scenario(save_scenario(scn)) == scn

    def test_map_and_observation_documents(self, road):
        assert load_map(save_map(road)) == road
        obs = cruising_observation(duration=1.0)
        again = load_observation(save_observation(obs))
        assert again.dt == obs.dt
        assert again.scenes[-1].ego == obs.scenes[-1].ego

    def test_unit_suffixed_field_names(self):
        doc = json.loads(save_scenario(straight_scenario([static_obstacle("cone", 20, 3.5)])))
        assert set(doc["task"]) == {"start", "destination", "goal_radius_m", "time_limit_s"}
        assert set(doc["participants"][0]["trajectory"][0]) == {"t_s", "x", "y", "heading_rad", "v_mps", "a_mps2"}

    def test_invalid_json(self):
        with pytest.raises(SchemaError) as exc_info:
            load_scenario("{not json")
        assert exc_info.value.details["document"] == "scenario"

    def test_unknown_field_is_rejected(self):
        doc = json.loads(save_scenario(straight_scenario()))
        doc["surprise"] = 1
        with pytest.raises(SchemaError):
            load_scenario(json.dumps(doc))

    def test_non_positive_footprint_is_rejected(self):
        doc = json.loads(save_scenario(straight_scenario([static_obstacle("cone", 20, 3.5)])))
        doc["participants"][0]["footprint"]["width_m"] = 0
        with pytest.raises(SchemaError):
            load_scenario(json.dumps(doc))

    def test_invariant_violation_on_load(self):
        text = save_scenario(straight_scenario([static_obstacle("a", 20, 0), static_obstacle("b", 20.1, 0)]))
        with pytest.raises(InvariantError) as exc_info:
            load_scenario(text)
        assert exc_info.value.violations

    def test_observation_with_one_scene(self):
        doc = json.loads(save_observation(cruising_observation(duration=1.0)))
        doc["scenes"] = doc["scenes"][:1]
        with pytest.raises(InvariantError):
            load_observation(json.dumps(doc))

    def test_file_round_trip_and_missing_file(self, tmp_path):
        scn = straight_scenario()
        target = tmp_path / "nested" / "seed.json"
        write_scenario(target, scn)
        assert read_scenario(target) == scn
        with pytest.raises(ScenarioLoadError):
            read_scenario(tmp_path / "missing.json")


class TestCorpus:
    def test_ids(self):
        assert corpus_seed_ids() == ["S1", "S2", "S3", "S4", "S5", "S6"]

    @pytest.mark.parametrize("seed_id", ["S1", "S2", "S3", "S4", "S5", "S6"])
    def test_every_seed_is_valid(self, corpus, seed_id):
        scn, road_map = corpus(seed_id)
        assert scn.map_id == road_map.id
        assert validate_scenario(scn, road_map) == []

    def test_roadside_cones(self, corpus):
        scn, road_map = corpus("S3")
        assert road_map.id == "three_lane"
        assert scn.task.destination == Point2(85.0, 0.0)
        assert scn.task.goal_radius == 2.5
        assert all(abs(p.initial.position.y) == pytest.approx(4.9) for p in scn.participants)

    def test_lowercase_id(self):
        scn, _ = load_corpus_seed("s3")
        assert scn.id == "S3"

    def test_unknown_seed(self):
        with pytest.raises(ScenarioLoadError):
            load_corpus_seed("S9")
