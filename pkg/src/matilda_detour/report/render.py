"""Top-down SVG drawings of scenarios, driving paths and their covered grid cells."""

import io
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import matplotlib
from matplotlib.figure import Figure
from matplotlib.patches import Circle, Polygon as PolygonPatch, Rectangle

from ..config.schema import GridSpec
from ..core.exceptions import IoError
from ..core.types import Origin
from ..geometry import rectangle_corners
from ..internal.utils import get_logger
from ..oracle import covered_grids
from ..scenario import DEFAULT_EGO_FOOTPRINT, PathLike, RoadMap, Scenario, path_array

logger = get_logger(__name__)

SVG_HASH_SALT = "matilda-detour"

LANE_FILL = "#E0E0E0"
CENTERLINE = "#9E9E9E"
SEED_COLOR = "#616161"
ADDED_COLOR = "#F57C00"
EGO_COLOR = "#1976D2"
GOAL_COLOR = "#388E3C"
PATH_COLORS = ("#1976D2", "#D32F2F", "#7B1FA2", "#00796B")
PATH_STYLES = ("-", "--", "-.", ":")


@dataclass(frozen=True)
class LabeledPath:
    label: str
    path: PathLike


PathsArg = Union[Mapping[str, PathLike], Sequence[LabeledPath], None]


def _labeled(paths: PathsArg) -> List[LabeledPath]:
    if paths is None:
        return []
    if isinstance(paths, Mapping):
        return [LabeledPath(label, path) for label, path in paths.items()]
    return list(paths)


def draw_road(ax, road_map: RoadMap) -> None:
    for ring in road_map.drivable.polygons:
        ax.add_patch(
            PolygonPatch([(p.x, p.y) for p in ring], closed=True, facecolor=LANE_FILL, edgecolor="none", zorder=1)
        )
    for lane in road_map.lanes:
        xs = [p.x for p in lane.centerline]
        ys = [p.y for p in lane.centerline]
        ax.plot(xs, ys, color=CENTERLINE, linewidth=0.8, linestyle=(0, (4, 4)), zorder=2)


def draw_participants(ax, scenario: Scenario) -> None:
    for participant in scenario.participants:
        color = ADDED_COLOR if participant.origin == Origin.ADDED else SEED_COLOR
        start = participant.initial
        ax.add_patch(
            PolygonPatch(
                rectangle_corners(start.pose, participant.footprint),
                closed=True,
                facecolor=color,
                edgecolor="black",
                linewidth=0.5,
                alpha=0.8,
                zorder=4,
            )
        )
        if not participant.is_static and len(participant.trajectory) > 1:
            xs = [w.position.x for w in participant.trajectory]
            ys = [w.position.y for w in participant.trajectory]
            ax.plot(xs, ys, color=color, linewidth=1.0, linestyle=":", marker=".", markersize=2, zorder=3)


def draw_task(ax, scenario: Scenario, ego_footprint=DEFAULT_EGO_FOOTPRINT) -> None:
    task = scenario.task
    ax.add_patch(
        PolygonPatch(
            rectangle_corners(task.start, ego_footprint),
            closed=True,
            facecolor="none",
            edgecolor=EGO_COLOR,
            linewidth=1.2,
            zorder=5,
        )
    )
    ax.add_patch(
        Circle(
            (task.destination.x, task.destination.y),
            task.goal_radius,
            facecolor="none",
            edgecolor=GOAL_COLOR,
            linestyle="--",
            zorder=5,
        )
    )


def draw_cells(ax, path: PathLike, grid: GridSpec, color: str) -> None:
    origin = grid.origin_point
    size = grid.cell_size
    for i, j in covered_grids(path, grid):
        ax.add_patch(
            Rectangle(
                (origin.x + i * size, origin.y + j * size),
                size,
                size,
                facecolor=color,
                edgecolor=color,
                linewidth=0.3,
                alpha=0.15,
                zorder=2,
            )
        )


def draw_paths(ax, paths: Iterable[LabeledPath], grid: Optional[GridSpec]) -> None:
    for k, item in enumerate(paths):
        color = PATH_COLORS[k % len(PATH_COLORS)]
        arr = path_array(item.path)
        if arr.size == 0:
            continue
        if grid is not None:
            draw_cells(ax, item.path, grid, color)
        ax.plot(
            arr[:, 0],
            arr[:, 1],
            color=color,
            linestyle=PATH_STYLES[k % len(PATH_STYLES)],
            linewidth=1.8,
            label=item.label,
            zorder=6,
        )


def _extent(road_map: RoadMap, margin: float = 2.0) -> Tuple[float, float, float, float]:
    minx, miny, maxx, maxy = road_map.bounds
    return minx - margin, maxx + margin, miny - margin, maxy + margin


def render_svg(
    road_map: RoadMap,
    scenario: Optional[Scenario] = None,
    paths: PathsArg = None,
    grid: Optional[GridSpec] = None,
    title: Optional[str] = None,
) -> bytes:
    """
    Draw lanes, participants, the motion task and driving paths as SVG.

    ``grid`` turns on the covered-cell overlay for every path. Output bytes depend only
    on the inputs.
    """
    labeled = _labeled(paths)
    fig = Figure(figsize=(10, 6))
    ax = fig.add_subplot(1, 1, 1)
    draw_road(ax, road_map)
    if scenario is not None:
        draw_participants(ax, scenario)
        draw_task(ax, scenario)
    draw_paths(ax, labeled, grid)

    x0, x1, y0, y1 = _extent(road_map)
    ax.set_xlim(x0, x1)
    ax.set_ylim(y0, y1)
    ax.set_aspect("equal")
    ax.set_xlabel("x [m]")
    ax.set_ylabel("y [m]")
    ax.set_title(title or (scenario.id if scenario is not None else road_map.id))
    if labeled:
        ax.legend(loc="upper right", fontsize=8)

    buffer = io.BytesIO()
    with matplotlib.rc_context({"svg.hashsalt": SVG_HASH_SALT, "svg.fonttype": "none"}):
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()


def write_svg(
    out: Union[str, Path],
    road_map: RoadMap,
    scenario: Optional[Scenario] = None,
    paths: PathsArg = None,
    grid: Optional[GridSpec] = None,
    title: Optional[str] = None,
) -> Path:
    """
    Render and write an SVG file.

    Raises:
        IoError: If the file cannot be written.
    """
    target = Path(out)
    data = render_svg(road_map, scenario, paths, grid, title)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_bytes(data)
    except OSError as e:
        raise IoError(str(target), e.strerror or str(e)) from e
    logger.debug(f"Rendered {target} ({len(data)} bytes)")
    return target


__all__ = ["LabeledPath", "SVG_HASH_SALT", "draw_cells", "render_svg", "write_svg"]
