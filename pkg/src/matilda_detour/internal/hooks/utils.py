#!/usr/bin/env python3
"""Shared helpers for the detour CLI hooks."""

import json as json_module
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import rich_click as click

from matilda_detour.config import CliConfig, load_config
from matilda_detour.core.exceptions import ConfigError, ScenarioLoadError
from matilda_detour.internal.utils import configure_logging, get_logger, level_for_flags, silence_for_json
from matilda_detour.scenario import (
    RoadMap,
    Scenario,
    corpus_seed_ids,
    load_corpus_map,
    load_corpus_seed,
    read_map,
    read_scenario,
)

logger = get_logger(__name__)


def setup_logging_level(verbose: bool = False, debug: bool = False, json_output: bool = False) -> None:
    """Setup logging level based on verbosity flags."""
    if json_output:
        silence_for_json()
        return
    configure_logging(level_for_flags(verbose, debug), quiet_libraries=not debug)


def _put(target: Dict[str, Any], dotted: str, value: Any) -> None:
    if value is None or value == ():
        return
    node = target
    *parents, leaf = dotted.split(".")
    for key in parents:
        node = node.setdefault(key, {})
    node[leaf] = value


def flag_overrides(**flags: Any) -> Dict[str, Any]:
    """
    Turn command-line flags into a config override document.

    Keys are dotted paths into ``CliConfig`` (``engine.budget.iterations``); ``None``
    means the flag was not given and leaves lower layers untouched.
    """
    data: Dict[str, Any] = {}
    for dotted, value in flags.items():
        _put(data, dotted.replace("__", "."), value)
    return data


def build_cli_config(config_path: Optional[str], overrides: Dict[str, Any]) -> CliConfig:
    """Merge defaults, environment, config file and flags into a ``CliConfig``."""
    cfg = load_config(config_path, overrides)
    logger.debug(f"Effective config: {cfg.model_dump(mode='json')}")
    return cfg


def is_corpus_id(value: Any) -> bool:
    return str(value).upper() in corpus_seed_ids() and not Path(str(value)).exists()


def load_scenario_arg(value: Any) -> Tuple[Scenario, Optional[RoadMap]]:
    """A scenario from a file path, or a bundled seed (with its map) from a corpus id."""
    if value is None:
        raise ConfigError("cli", "a scenario is required", "seed_scenario")
    if is_corpus_id(value):
        return load_corpus_seed(str(value))
    return read_scenario(Path(value)), None


def resolve_map(scenario: Scenario, map_path: Optional[Path], bundled: Optional[RoadMap] = None) -> RoadMap:
    """
    The map for ``scenario``: ``map_path`` if given, else the map bundled with a corpus
    seed, else the corpus map named by ``scenario.map_id``.
    """
    if map_path is not None:
        road_map = read_map(map_path)
    elif bundled is not None:
        road_map = bundled
    else:
        try:
            road_map = load_corpus_map(scenario.map_id)
        except ScenarioLoadError:
            raise ConfigError("cli", f"no map given and {scenario.map_id!r} is not a bundled map", "map") from None
    if road_map.id != scenario.map_id:
        logger.warning(f"Scenario {scenario.id} names map {scenario.map_id!r} but map {road_map.id!r} was given")
    return road_map


def resolve_inputs(cfg: CliConfig) -> Tuple[Scenario, RoadMap]:
    scenario, bundled = load_scenario_arg(cfg.seed_scenario)
    return scenario, resolve_map(scenario, cfg.map_path, bundled)


def emit_json(data: Any) -> None:
    click.echo(json_module.dumps(data, indent=2))


__all__ = [
    "build_cli_config",
    "emit_json",
    "flag_overrides",
    "is_corpus_id",
    "load_scenario_arg",
    "resolve_inputs",
    "resolve_map",
    "setup_logging_level",
]
