"""
Custom exception hierarchy for the detour search library.

This module defines specific exceptions for different error scenarios,
making it easier for callers to handle errors programmatically.
"""

from typing import Any, Dict, List, Optional


class DetourError(Exception):
    """Base exception for all detour library errors."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        """
        Initialize a DetourError.

        Args:
            message: Human-readable error message
            details: Optional dictionary with additional error context
        """
        super().__init__(message)
        self.message = message
        self.details = details or {}


# Geometry exceptions


class GeometryError(DetourError):
    """Base exception for planar geometry errors."""

    pass


class EmptyRegionError(GeometryError):
    """Raised when a point is requested from a region with zero area."""

    def __init__(self, context: Optional[str] = None):
        message = "Cannot sample from an empty region"
        if context:
            message += f" ({context})"
        super().__init__(message, {"context": context})


# Scenario exceptions


class ScenarioError(DetourError):
    """Base exception for scenario and map data errors."""

    pass


class SchemaError(ScenarioError):
    """Raised when a scenario or map document does not match its schema."""

    def __init__(self, document: str, reason: str):
        message = f"Invalid {document} document: {reason}"
        super().__init__(message, {"document": document, "reason": reason})


class InvariantError(ScenarioError):
    """Raised when a well-formed document violates a type invariant."""

    def __init__(self, violations: List[Any]):
        summary = "; ".join(str(v) for v in violations[:3])
        if len(violations) > 3:
            summary += f" (+{len(violations) - 3} more)"
        message = f"Scenario invariant violated: {summary}"
        super().__init__(message, {"violations": [str(v) for v in violations]})
        self.violations = list(violations)


class ScenarioLoadError(ScenarioError):
    """Raised when a scenario, map or observation file cannot be read."""

    def __init__(self, file_path: str, reason: str):
        message = f"Failed to load '{file_path}': {reason}"
        super().__init__(message, {"file_path": file_path, "reason": reason})


class ScenarioSaveError(ScenarioError):
    """Raised when a scenario, map or observation file cannot be written."""

    def __init__(self, file_path: str, reason: str):
        message = f"Failed to save '{file_path}': {reason}"
        super().__init__(message, {"file_path": file_path, "reason": reason})


# Simulation exceptions


class SimulationError(DetourError):
    """Base exception for closed-loop simulation errors."""

    pass


class NoRouteError(SimulationError):
    """Raised by a planner when no lattice path reaches the destination."""

    def __init__(self, planner: str, reason: Optional[str] = None):
        message = f"Planner '{planner}' found no route"
        if reason:
            message += f": {reason}"
        super().__init__(message, {"planner": planner, "reason": reason})


# Mutation exceptions


class MutationError(DetourError):
    """Base exception for scenario mutation errors."""

    pass


class SaturatedError(MutationError):
    """Raised when no more participants may be added to a scenario."""

    def __init__(self, added: int, max_added: int):
        message = f"Scenario already holds {added} added participants (limit {max_added})"
        super().__init__(message, {"added": added, "max_added": max_added})


# Oracle exceptions


class OracleError(DetourError):
    """Base exception for consistency-check errors."""

    pass


class BothEmptyError(OracleError):
    """Raised when the similarity of two empty grid-cell sets is requested."""

    def __init__(self) -> None:
        super().__init__("Grid similarity is undefined for two empty cell sets", {})


# Configuration exceptions


class ConfigurationError(DetourError):
    """Base exception for configuration-related errors."""

    pass


class ConfigError(ConfigurationError):
    """Raised when a configuration object holds invalid values."""

    def __init__(self, section: str, reason: str, field: Optional[str] = None):
        message = f"Invalid {section} configuration: {reason}"
        super().__init__(message, {"section": section, "reason": reason, "field": field})


class ConfigFileError(ConfigurationError):
    """Raised when there's an error with a configuration file."""

    def __init__(self, file_path: str, reason: str):
        message = f"Error reading configuration file '{file_path}': {reason}"
        super().__init__(message, {"file_path": file_path, "reason": reason})


class UnknownStrategyError(ConfigurationError):
    """Raised when a campaign strategy name is not recognised."""

    def __init__(self, strategy: str, known: Optional[List[str]] = None):
        message = f"Unknown strategy '{strategy}'"
        if known:
            message += f". Known strategies: {', '.join(known)}"
        super().__init__(message, {"strategy": strategy, "known": known or []})


class UnknownPlannerError(ConfigurationError):
    """Raised when a planner preset name is not registered."""

    def __init__(self, name: str, known: Optional[List[str]] = None):
        message = f"Unknown planner preset '{name}'"
        if known:
            message += f". Registered presets: {', '.join(known)}"
        super().__init__(message, {"planner": name, "known": known or []})


# Campaign exceptions


class CampaignError(DetourError):
    """Base exception for search campaign errors."""

    pass


class SeedRejectedError(CampaignError):
    """Raised when the seed scenario fails simulation or validation."""

    def __init__(self, seed_id: str, reason: str):
        message = f"Seed scenario '{seed_id}' rejected: {reason}"
        super().__init__(message, {"seed_id": seed_id, "reason": reason})


# Report exceptions


class ReportError(DetourError):
    """Base exception for rendering and export errors."""

    pass


class IoError(ReportError):
    """Raised when a report artifact cannot be written."""

    def __init__(self, file_path: str, reason: str):
        message = f"Failed to write '{file_path}': {reason}"
        super().__init__(message, {"file_path": file_path, "reason": reason})
