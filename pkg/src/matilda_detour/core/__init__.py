"""Core enumerations and exceptions shared by every detour package."""

from .exceptions import (
    BothEmptyError,
    CampaignError,
    ConfigError,
    ConfigFileError,
    ConfigurationError,
    DetourError,
    EmptyRegionError,
    GeometryError,
    InvariantError,
    IoError,
    MutationError,
    NoRouteError,
    OracleError,
    ReportError,
    SaturatedError,
    ScenarioError,
    ScenarioLoadError,
    ScenarioSaveError,
    SchemaError,
    SeedRejectedError,
    SimulationError,
    UnknownPlannerError,
    UnknownStrategyError,
)
from .types import MutationOp, Origin, OutcomeStatus, ParticipantKind, SelectionMode, Strategy

__all__ = [
    "MutationOp",
    "Origin",
    "OutcomeStatus",
    "ParticipantKind",
    "SelectionMode",
    "Strategy",
    # Exceptions
    "BothEmptyError",
    "CampaignError",
    "ConfigError",
    "ConfigFileError",
    "ConfigurationError",
    "DetourError",
    "EmptyRegionError",
    "GeometryError",
    "InvariantError",
    "IoError",
    "MutationError",
    "NoRouteError",
    "OracleError",
    "ReportError",
    "SaturatedError",
    "ScenarioError",
    "ScenarioLoadError",
    "ScenarioSaveError",
    "SchemaError",
    "SeedRejectedError",
    "SimulationError",
    "UnknownPlannerError",
    "UnknownStrategyError",
]
