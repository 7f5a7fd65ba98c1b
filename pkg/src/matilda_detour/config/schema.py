"""Typed configuration models for search campaigns."""

import math
from pathlib import Path
from typing import Any, Dict, Literal, Optional, Tuple, Type, TypeVar, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from ..core.exceptions import ConfigError
from ..core.types import MutationOp, SelectionMode, Strategy
from ..geometry.primitives import Footprint, Point2

M = TypeVar("M", bound=BaseModel)


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class FootprintSpec(_Frozen):
    """Rectangular extent in meters."""

    length: float = Field(gt=0)
    width: float = Field(gt=0)

    def to_footprint(self) -> Footprint:
        return Footprint(self.length, self.width)


class GridSpec(_Frozen):
    """Axis-aligned grid used by the consistency check.

    ``origin`` of ``None`` anchors the grid at the map bounding-box minimum once a
    campaign resolves it; used standalone it behaves as (0, 0).
    """

    cell_size: float = Field(default=2.0, gt=0)
    origin: Optional[Tuple[float, float]] = None

    @field_validator("origin", mode="before")
    @classmethod
    def _accept_point(cls, value: Any) -> Any:
        if isinstance(value, Point2):
            return (value.x, value.y)
        if isinstance(value, dict):
            return (value.get("x"), value.get("y"))
        return value

    @property
    def origin_point(self) -> Point2:
        if self.origin is None:
            return Point2(0.0, 0.0)
        return Point2(*self.origin)

    def anchored_at(self, origin: Point2) -> "GridSpec":
        return self.model_copy(update={"origin": (origin.x, origin.y)})


class KernelSpec(_Frozen):
    """Kernel used by the behavior feedback."""

    kind: Literal["rbf"] = "rbf"
    bandwidth: Union[Literal["median"], float] = "median"

    @field_validator("bandwidth")
    @classmethod
    def _positive_bandwidth(cls, value: Union[str, float]) -> Union[str, float]:
        if not isinstance(value, str) and not value > 0:
            raise ValueError("fixed bandwidth must be > 0")
        return value


def _default_op_weights() -> Dict[MutationOp, float]:
    return {MutationOp.ADD: 0.5, MutationOp.REMOVE: 0.2, MutationOp.CHANGE: 0.3}


class MutationConfig(_Frozen):
    """Knobs of the non-invasive and random mutation operators."""

    delta_t: float = Field(default=2.0, gt=0)
    max_added: int = Field(default=6, ge=0)
    npc_speed_max: float = Field(default=8.0, ge=0)
    npc_steer_max: float = Field(default=0.5, gt=0, le=math.pi / 2)
    static_fraction: float = Field(default=0.4, ge=0, le=1)
    op_weights: Dict[MutationOp, float] = Field(default_factory=_default_op_weights)
    clearance: float = Field(default=0.5, ge=0)
    sample_attempts: int = Field(default=8, ge=1)
    retry_budget: int = Field(default=3, ge=1)
    ego_footprint: FootprintSpec = FootprintSpec(length=4.6, width=2.1)
    npc_footprint: FootprintSpec = FootprintSpec(length=4.5, width=1.9)
    static_footprint: FootprintSpec = FootprintSpec(length=0.6, width=0.6)

    @field_validator("op_weights")
    @classmethod
    def _weights_are_distribution(cls, value: Dict[MutationOp, float]) -> Dict[MutationOp, float]:
        if any(w < 0 for w in value.values()):
            raise ValueError("op_weights must be non-negative")
        if abs(sum(value.values()) - 1.0) > 1e-9:
            raise ValueError(f"op_weights must sum to 1, got {sum(value.values())}")
        return {op: float(value.get(op, 0.0)) for op in MutationOp}


class VehicleParams(_Frozen):
    """Ego kinematics and tracking gains."""

    length: float = Field(default=4.6, gt=0)
    width: float = Field(default=2.1, gt=0)
    wheelbase: float = Field(default=2.8, gt=0)
    speed_max: float = Field(default=10.0, gt=0)
    accel_max: float = Field(default=2.0, gt=0)
    decel_max: float = Field(default=4.0, gt=0)
    steer_max: float = Field(default=0.6, gt=0, le=math.pi / 2)
    lookahead_min: float = Field(default=3.0, gt=0)
    lookahead_gain: float = Field(default=0.6, ge=0)
    speed_gain: float = Field(default=1.5, gt=0)

    @property
    def footprint(self) -> Footprint:
        return Footprint(self.length, self.width)


class SimConfig(_Frozen):
    """Closed-loop simulation settings."""

    sim_dt: float = Field(default=0.1, gt=0)
    max_steps: int = Field(default=1200, ge=1)
    replan_period: float = Field(default=0.5, gt=0)
    stuck_window_s: float = Field(default=10.0, gt=0)
    stuck_distance_m: float = Field(default=0.2, ge=0)
    prediction_horizon_s: float = Field(default=2.0, ge=0)
    prediction_step_s: float = Field(default=0.5, gt=0)
    vehicle: VehicleParams = VehicleParams()

    @model_validator(mode="after")
    def _replan_not_faster_than_step(self) -> "SimConfig":
        if self.replan_period < self.sim_dt:
            raise ValueError(f"replan_period ({self.replan_period}) must be >= sim_dt ({self.sim_dt})")
        return self


class PlannerParams(_Frozen):
    """Lattice planner weights and inflation radii.

    ``block_margin`` and ``block_extra`` add to half the ego width to give the
    blocking radius; ``inflation_band`` extends it into the soft-cost radius.
    """

    resolution: float = Field(default=0.5, gt=0)
    block_margin: float = Field(default=0.3, ge=0)
    block_extra: float = Field(default=0.0, ge=0)
    inflation_band: float = Field(default=1.2, ge=0)
    lambda_obs: float = Field(default=5.0, ge=0)
    lambda_lc: float = Field(default=8.0, ge=0)
    predict_horizon_s: float = Field(default=2.0, ge=0)
    cruise_speed: float = Field(default=8.0, gt=0)
    comfort_decel: float = Field(default=2.0, gt=0)
    reuse_tolerance: float = Field(default=1.0, ge=0)
    start_search_radius: float = Field(default=2.0, ge=0)

    def block_radius(self, ego_width: float) -> float:
        return 0.5 * ego_width + self.block_margin + self.block_extra

    def inflation_radius(self, ego_width: float) -> float:
        return self.block_radius(ego_width) + self.inflation_band


class BudgetSpec(_Frozen):
    """Campaign budget: an iteration count, a wall-clock limit, or both (first hit wins)."""

    iterations: Optional[int] = Field(default=10, ge=0)
    wall_clock_s: Optional[float] = Field(default=None, gt=0)

    @model_validator(mode="after")
    def _some_budget(self) -> "BudgetSpec":
        if self.iterations is None and self.wall_clock_s is None:
            raise ValueError("budget needs iterations or wall_clock_s")
        return self


class EngineConfig(_Frozen):
    """Everything a campaign needs besides the seed, the map and the planner."""

    population_n: int = Field(default=4, ge=1)
    budget: BudgetSpec = BudgetSpec()
    strategy: Strategy = Strategy.GUIDED
    epsilon: float = Field(default=0.6, ge=0, lt=1)
    grid: GridSpec = GridSpec()
    mutation: MutationConfig = MutationConfig()
    sim: SimConfig = SimConfig()
    kernel: KernelSpec = KernelSpec()
    rng_seed: int = 0
    jobs: int = Field(default=1, ge=1)
    selection: SelectionMode = SelectionMode.TOP_N


class RenderOptions(_Frozen):
    enabled: bool = True
    grid_overlay: bool = True


class CliConfig(_Frozen):
    """Engine settings plus the file locations and toggles the command line needs."""

    engine: EngineConfig = EngineConfig()
    map_path: Optional[Path] = None
    seed_scenario: Optional[Path] = None
    out_dir: Path = Path("detour-out")
    planner_preset: str = "default"
    planner: Dict[str, Any] = Field(default_factory=dict)
    render: RenderOptions = RenderOptions()


def build_model(model_cls: Type[M], data: Dict[str, Any], section: Optional[str] = None) -> M:
    """Validate ``data`` into ``model_cls``, turning pydantic errors into ``ConfigError``."""
    try:
        return model_cls.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0] if e.errors() else {}
        field = ".".join(str(part) for part in first.get("loc", ())) or None
        reason = first.get("msg", str(e))
        raise ConfigError(section or model_cls.__name__, reason, field) from e


__all__ = [
    "FootprintSpec",
    "GridSpec",
    "KernelSpec",
    "MutationConfig",
    "VehicleParams",
    "SimConfig",
    "PlannerParams",
    "BudgetSpec",
    "EngineConfig",
    "RenderOptions",
    "CliConfig",
    "build_model",
]
