"""
Matilda Detour

Search driving scenarios for non-optimal path-planning decisions: the ego vehicle
still reaches its goal safely, but no longer along the path it took before
participants were added around it.
"""

from importlib import import_module, metadata
from pathlib import Path
import tomllib
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .config import CliConfig, EngineConfig, GridSpec, KernelSpec, MutationConfig, SimConfig, load_config
    from .core.exceptions import (
        BothEmptyError,
        ConfigError,
        ConfigFileError,
        DetourError,
        EmptyRegionError,
        InvariantError,
        IoError,
        NoRouteError,
        SaturatedError,
        SchemaError,
        SeedRejectedError,
        UnknownPlannerError,
        UnknownStrategyError,
    )
    from .core.types import MutationOp, OutcomeStatus, Strategy
    from .engine import CampaignResult, compare_strategies, run_campaign, strategy_dispatch
    from .feedback import Fitness, fitness
    from .mutation import mutate, non_invasive_area
    from .oracle import consistency_check, covered_grids, grid_similarity
    from .scenario import Observation, RoadMap, Scenario, load_corpus_seed, read_map, read_scenario
    from .simulator import get_planner, replay_validation, simulate


_EXPORTS = {
    "run_campaign": (".engine", "run_campaign"),
    "compare_strategies": (".engine", "compare_strategies"),
    "strategy_dispatch": (".engine", "strategy_dispatch"),
    "CampaignResult": (".engine", "CampaignResult"),
    "simulate": (".simulator", "simulate"),
    "replay_validation": (".simulator", "replay_validation"),
    "get_planner": (".simulator", "get_planner"),
    "mutate": (".mutation", "mutate"),
    "non_invasive_area": (".mutation", "non_invasive_area"),
    "consistency_check": (".oracle", "consistency_check"),
    "covered_grids": (".oracle", "covered_grids"),
    "grid_similarity": (".oracle", "grid_similarity"),
    "fitness": (".feedback", "fitness"),
    "Fitness": (".feedback", "Fitness"),
    "Scenario": (".scenario", "Scenario"),
    "RoadMap": (".scenario", "RoadMap"),
    "Observation": (".scenario", "Observation"),
    "read_scenario": (".scenario", "read_scenario"),
    "read_map": (".scenario", "read_map"),
    "load_corpus_seed": (".scenario", "load_corpus_seed"),
    "EngineConfig": (".config", "EngineConfig"),
    "SimConfig": (".config", "SimConfig"),
    "MutationConfig": (".config", "MutationConfig"),
    "GridSpec": (".config", "GridSpec"),
    "KernelSpec": (".config", "KernelSpec"),
    "CliConfig": (".config", "CliConfig"),
    "load_config": (".config", "load_config"),
    "Strategy": (".core.types", "Strategy"),
    "MutationOp": (".core.types", "MutationOp"),
    "OutcomeStatus": (".core.types", "OutcomeStatus"),
    "DetourError": (".core.exceptions", "DetourError"),
    "EmptyRegionError": (".core.exceptions", "EmptyRegionError"),
    "SchemaError": (".core.exceptions", "SchemaError"),
    "InvariantError": (".core.exceptions", "InvariantError"),
    "NoRouteError": (".core.exceptions", "NoRouteError"),
    "SaturatedError": (".core.exceptions", "SaturatedError"),
    "BothEmptyError": (".core.exceptions", "BothEmptyError"),
    "ConfigError": (".core.exceptions", "ConfigError"),
    "ConfigFileError": (".core.exceptions", "ConfigFileError"),
    "UnknownStrategyError": (".core.exceptions", "UnknownStrategyError"),
    "UnknownPlannerError": (".core.exceptions", "UnknownPlannerError"),
    "SeedRejectedError": (".core.exceptions", "SeedRejectedError"),
    "IoError": (".core.exceptions", "IoError"),
}


def __getattr__(name: str):
    target = _EXPORTS.get(name)
    if target is None:
        raise AttributeError(f"module {__name__!r} has no attribute {name!r}")

    module_name, attr_name = target
    module = import_module(module_name, __name__)
    value = getattr(module, attr_name)
    globals()[name] = value
    return value


def _get_version() -> str:
    try:
        return metadata.version("goobits-matilda-detour")
    except Exception:
        pass

    try:
        pyproject_path = Path(__file__).resolve().parents[2] / "pyproject.toml"
        with open(pyproject_path, "rb") as f:
            data = tomllib.load(f)
        return str(data["project"]["version"])
    except Exception:
        return "unknown"


__version__ = _get_version()
__all__ = list(_EXPORTS)
