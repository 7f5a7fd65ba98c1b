"""Configuration models and loading for detour campaigns."""

from .loader import deep_merge, dump_config, env_overrides, find_config_file, load_config, load_config_file
from .schema import (
    BudgetSpec,
    CliConfig,
    EngineConfig,
    FootprintSpec,
    GridSpec,
    KernelSpec,
    MutationConfig,
    PlannerParams,
    RenderOptions,
    SimConfig,
    VehicleParams,
    build_model,
)

__all__ = [
    "BudgetSpec",
    "CliConfig",
    "EngineConfig",
    "FootprintSpec",
    "GridSpec",
    "KernelSpec",
    "MutationConfig",
    "PlannerParams",
    "RenderOptions",
    "SimConfig",
    "VehicleParams",
    "build_model",
    "deep_merge",
    "dump_config",
    "env_overrides",
    "find_config_file",
    "load_config",
    "load_config_file",
]
