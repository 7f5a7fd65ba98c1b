"""Named planner presets and the registry that builds planners from them."""

from typing import Any, Callable, Dict, List, Optional

from ...config.schema import PlannerParams, build_model
from ...core.exceptions import ConfigError, UnknownPlannerError
from ...internal.utils import get_logger
from .base import Planner
from .lattice import LatticePlanner

logger = get_logger(__name__)

PlannerFactory = Callable[[str, PlannerParams], Planner]


class PlannerPreset:
    """
    Metadata for a registered planner preset.
    """

    def __init__(
        self,
        name: str,
        factory: PlannerFactory,
        params: Optional[Dict[str, Any]] = None,
        description: str = "",
    ):
        self.name = name
        self.factory = factory
        self.params = params or {}
        self.description = description


class PlannerRegistry:
    """
    Registry of planner presets, keyed by the name the CLI accepts.
    """

    def __init__(self) -> None:
        self.presets: Dict[str, PlannerPreset] = {}

    def register_preset(self, preset: PlannerPreset) -> None:
        if preset.name in self.presets:
            logger.warning(f"Overwriting existing planner preset: {preset.name}")
        self.presets[preset.name] = preset
        logger.debug(f"Registered planner preset: {preset.name}")

    def register_planner(self, name: str, factory: PlannerFactory, **metadata: Any) -> None:
        """Convenience method to register a factory directly."""
        if not callable(factory):
            raise TypeError("Planner factory must be callable")
        self.register_preset(PlannerPreset(name, factory, **metadata))

    def list_presets(self) -> List[str]:
        return sorted(self.presets)

    def create_planner(self, name: str, overrides: Optional[Dict[str, Any]] = None) -> Planner:
        """
        Build a fresh planner for a preset.

        Args:
            name: Preset name
            overrides: PlannerParams fields that replace the preset's values

        Raises:
            UnknownPlannerError: If ``name`` is not registered.
            ConfigError: If the merged parameters are invalid.
        """
        preset = self.presets.get(name)
        if preset is None:
            raise UnknownPlannerError(name, self.list_presets())
        params = build_model(PlannerParams, {**preset.params, **(overrides or {})}, section="planner")
        try:
            return preset.factory(name, params)
        except (TypeError, ValueError) as e:
            raise ConfigError("planner", f"failed to build '{name}': {e}") from e


def _lattice(name: str, params: PlannerParams) -> Planner:
    return LatticePlanner(params, name=name)


# Global registry instance
planner_registry = PlannerRegistry()
planner_registry.register_planner(
    "default",
    _lattice,
    description="Lattice A* with the standard blocking and inflation radii",
)
planner_registry.register_planner(
    "timid",
    _lattice,
    params={"block_extra": 0.8},
    description="Lattice A* whose blocking radius is widened by 0.8 m",
)


def get_planner(name: str = "default", overrides: Optional[Dict[str, Any]] = None) -> Planner:
    return planner_registry.create_planner(name, overrides)


def list_planners() -> List[str]:
    return planner_registry.list_presets()


def register_planner(name: str, factory: PlannerFactory, **metadata: Any) -> None:
    planner_registry.register_planner(name, factory, **metadata)


__all__ = [
    "PlannerPreset",
    "PlannerRegistry",
    "planner_registry",
    "get_planner",
    "list_planners",
    "register_planner",
]
