"""Scenario data model: maps, participants, observations and their JSON documents."""

from .models import (
    DEFAULT_EGO_FOOTPRINT,
    EGO_ID,
    DrivingPath,
    Lane,
    MotionTask,
    Observation,
    Participant,
    PathLike,
    RoadMap,
    Scenario,
    Scene,
    Waypoint,
    ego_path,
    path_array,
)
from .serialization import (
    corpus_seed_ids,
    load_corpus_map,
    load_corpus_seed,
    load_map,
    load_observation,
    load_scenario,
    read_map,
    read_observation,
    read_scenario,
    save_map,
    save_observation,
    save_scenario,
    write_map,
    write_observation,
    write_scenario,
)
from .validation import Violation, map_violations, scenario_violations, validate_scenario

__all__ = [
    "DEFAULT_EGO_FOOTPRINT",
    "EGO_ID",
    "DrivingPath",
    "Lane",
    "MotionTask",
    "Observation",
    "Participant",
    "PathLike",
    "RoadMap",
    "Scenario",
    "Scene",
    "Violation",
    "Waypoint",
    "corpus_seed_ids",
    "ego_path",
    "load_corpus_map",
    "load_corpus_seed",
    "load_map",
    "load_observation",
    "load_scenario",
    "map_violations",
    "path_array",
    "read_map",
    "read_observation",
    "read_scenario",
    "save_map",
    "save_observation",
    "save_scenario",
    "scenario_violations",
    "validate_scenario",
    "write_map",
    "write_observation",
    "write_scenario",
]
