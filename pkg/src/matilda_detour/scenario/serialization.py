"""JSON reading and writing for scenarios, maps and observations."""

import json
from importlib import resources
from pathlib import Path
from typing import Any, List, Tuple, Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from ..core.exceptions import InvariantError, ScenarioLoadError, ScenarioSaveError, SchemaError
from ..geometry import Footprint
from ..internal.utils import get_logger
from .models import DEFAULT_EGO_FOOTPRINT, Observation, RoadMap, Scenario
from .schema import MapDoc, ObservationDoc, ScenarioDoc
from .validation import map_violations, scenario_violations

logger = get_logger(__name__)

D = TypeVar("D", bound=BaseModel)

CORPUS_PACKAGE = "matilda_detour.scenario"
CORPUS_SEEDS = {
    "S1": "s1_left_turn.json",
    "S2": "s2_right_turn.json",
    "S3": "s3_roadside_cones.json",
    "S4": "s4_u_turn.json",
    "S5": "s5_crossing.json",
    "S6": "s6_driveway_exit.json",
}


def _parse(text: str, doc_cls: Type[D], document: str) -> D:
    try:
        raw: Any = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(document, f"not valid JSON: {e}") from e
    try:
        return doc_cls.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first["loc"]) or "<root>"
        raise SchemaError(document, f"{where}: {first['msg']}") from e


def _dump(doc: BaseModel) -> str:
    return json.dumps(doc.model_dump(mode="json"), indent=2) + "\n"


def load_scenario(text: str, ego_footprint: Footprint = DEFAULT_EGO_FOOTPRINT) -> Scenario:
    """
    Parse a scenario document.

    Raises:
        SchemaError: If the document is malformed or a value is out of range.
        InvariantError: If the scenario breaks a type invariant (overlap at t=0,
            non-uniform timestamps, ...).
    """
    doc = _parse(text, ScenarioDoc, "scenario")
    try:
        scenario = doc.to_scenario()
    except ValueError as e:
        raise SchemaError("scenario", str(e)) from e
    violations = scenario_violations(scenario, ego_footprint)
    if violations:
        raise InvariantError(violations)
    return scenario


def save_scenario(scenario: Scenario) -> str:
    return _dump(ScenarioDoc.of(scenario))


def load_map(text: str) -> RoadMap:
    doc = _parse(text, MapDoc, "map")
    try:
        road_map = doc.to_map()
    except ValueError as e:
        raise SchemaError("map", str(e)) from e
    violations = map_violations(road_map)
    if violations:
        raise InvariantError(violations)
    return road_map


def save_map(road_map: RoadMap) -> str:
    return _dump(MapDoc.of(road_map))


def load_observation(text: str) -> Observation:
    doc = _parse(text, ObservationDoc, "observation")
    try:
        return doc.to_observation()
    except ValueError as e:
        raise SchemaError("observation", str(e)) from e


def save_observation(observation: Observation) -> str:
    return _dump(ObservationDoc.of(observation))


def _read_text(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ScenarioLoadError(str(path), e.strerror or str(e)) from e


def _write_text(path: Union[str, Path], text: str) -> None:
    try:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        raise ScenarioSaveError(str(path), e.strerror or str(e)) from e


def read_scenario(path: Union[str, Path]) -> Scenario:
    return load_scenario(_read_text(path))


def write_scenario(path: Union[str, Path], scenario: Scenario) -> None:
    _write_text(path, save_scenario(scenario))


def read_map(path: Union[str, Path]) -> RoadMap:
    return load_map(_read_text(path))


def write_map(path: Union[str, Path], road_map: RoadMap) -> None:
    _write_text(path, save_map(road_map))


def read_observation(path: Union[str, Path]) -> Observation:
    return load_observation(_read_text(path))


def write_observation(path: Union[str, Path], observation: Observation) -> None:
    _write_text(path, save_observation(observation))


def _corpus_text(*parts: str) -> str:
    node = resources.files(CORPUS_PACKAGE).joinpath("corpus")
    for part in parts:
        node = node.joinpath(part)
    try:
        return node.read_text(encoding="utf-8")
    except (OSError, FileNotFoundError) as e:
        raise ScenarioLoadError("corpus/" + "/".join(parts), str(e)) from e


def corpus_seed_ids() -> List[str]:
    return list(CORPUS_SEEDS)


def load_corpus_map(map_id: str) -> RoadMap:
    return load_map(_corpus_text("maps", f"{map_id}.json"))


def load_corpus_seed(seed_id: str) -> Tuple[Scenario, RoadMap]:
    """Load a bundled seed scenario (``S1`` ... ``S6``) together with its map."""
    filename = CORPUS_SEEDS.get(seed_id.upper())
    if filename is None:
        raise ScenarioLoadError(seed_id, f"unknown corpus seed; choose from {', '.join(CORPUS_SEEDS)}")
    scenario = load_scenario(_corpus_text(filename))
    logger.debug(f"Loaded corpus seed {seed_id} on map {scenario.map_id}")
    return scenario, load_corpus_map(scenario.map_id)


__all__ = [
    "CORPUS_SEEDS",
    "load_scenario",
    "save_scenario",
    "load_map",
    "save_map",
    "load_observation",
    "save_observation",
    "read_scenario",
    "write_scenario",
    "read_map",
    "write_map",
    "read_observation",
    "write_observation",
    "corpus_seed_ids",
    "load_corpus_map",
    "load_corpus_seed",
]
