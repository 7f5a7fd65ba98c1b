"""Reference planner: A* over a regular lattice of the drivable area."""

import heapq
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import shapely
from scipy.ndimage import distance_transform_edt
from shapely.geometry import LineString, Point, Polygon

from ...config.schema import PlannerParams
from ...core.exceptions import NoRouteError
from ...geometry import Point2, rectangle_polygon
from ...internal.utils import get_logger
from ...scenario import RoadMap
from .base import PlannedPath, Planner, WorldView

logger = get_logger(__name__)

SQRT2 = math.sqrt(2.0)
# (dx, dy, step length in lattice units)
NEIGHBORS = (
    (1, 0, 1.0),
    (-1, 0, 1.0),
    (0, 1, 1.0),
    (0, -1, 1.0),
    (1, 1, SQRT2),
    (1, -1, SQRT2),
    (-1, 1, SQRT2),
    (-1, -1, SQRT2),
)


class Lattice:
    """Node grid over one map for one ego width; everything here is obstacle-independent."""

    def __init__(self, road_map: RoadMap, resolution: float, ego_width: float):
        self.resolution = resolution
        minx, miny, maxx, maxy = road_map.bounds
        self.x0 = math.floor(minx / resolution) * resolution
        self.y0 = math.floor(miny / resolution) * resolution
        self.nx = int(math.ceil((maxx - self.x0) / resolution)) + 1
        self.ny = int(math.ceil((maxy - self.y0) / resolution)) + 1
        self.xs = self.x0 + resolution * np.arange(self.nx)
        self.ys = self.y0 + resolution * np.arange(self.ny)
        grid_x, grid_y = np.meshgrid(self.xs, self.ys)
        self.points = shapely.points(grid_x, grid_y)

        drivable = shapely.contains_xy(road_map.drivable.geometry, grid_x, grid_y)
        # distance to the nearest off-road node, less half a cell to land on the boundary
        edge_distance = distance_transform_edt(drivable) * resolution - 0.5 * resolution
        self.free = drivable & (edge_distance >= 0.5 * ego_width)

        self.lane_ids = [lane.id for lane in road_map.lanes]
        lane_index = np.full((self.ny, self.nx), -1, dtype=int)
        if road_map.lanes:
            rows, cols = np.nonzero(drivable)
            pts = self.points[rows, cols]
            dists = np.stack([shapely.distance(lane.line, pts) for lane in road_map.lanes])
            lane_index[rows, cols] = np.argmin(dists, axis=0)
        self.lane_index = lane_index

        index = {lane_id: i for i, lane_id in enumerate(self.lane_ids)}
        n = len(self.lane_ids)
        self.neighbors = [[False] * n for _ in range(n)]
        for lane in road_map.lanes:
            for other in (lane.left_neighbor, lane.right_neighbor):
                if other in index:
                    self.neighbors[index[lane.id]][index[other]] = True
                    self.neighbors[index[other]][index[lane.id]] = True

    def node_of(self, p: Point2) -> Tuple[int, int]:
        ix = int(round((p.x - self.x0) / self.resolution))
        iy = int(round((p.y - self.y0) / self.resolution))
        return min(max(ix, 0), self.nx - 1), min(max(iy, 0), self.ny - 1)

    def point_of(self, ix: int, iy: int) -> Point2:
        return Point2(float(self.xs[ix]), float(self.ys[iy]))

    def nearest(self, p: Point2, mask: np.ndarray, radius: float) -> Optional[Tuple[int, int]]:
        """Closest node in ``mask`` within ``radius`` of ``p``; ties go to lower (y, x)."""
        cx, cy = self.node_of(p)
        if mask[cy, cx] and math.hypot(self.xs[cx] - p.x, self.ys[cy] - p.y) <= max(radius, self.resolution):
            return cx, cy
        span = int(math.ceil(radius / self.resolution)) + 1
        x_lo, x_hi = max(0, cx - span), min(self.nx, cx + span + 1)
        y_lo, y_hi = max(0, cy - span), min(self.ny, cy + span + 1)
        window = mask[y_lo:y_hi, x_lo:x_hi]
        rows, cols = np.nonzero(window)
        if rows.size == 0:
            return None
        d = np.hypot(self.xs[x_lo + cols] - p.x, self.ys[y_lo + rows] - p.y)
        order = np.lexsort((cols, rows, d))
        best = order[0]
        if d[best] > radius:
            return None
        return int(x_lo + cols[best]), int(y_lo + rows[best])


@dataclass
class CostField:
    blocked: np.ndarray
    penalty: np.ndarray

    def same_as(self, other: Optional["CostField"]) -> bool:
        return (
            other is not None
            and np.array_equal(self.blocked, other.blocked)
            and np.array_equal(self.penalty, other.penalty)
        )


class LatticePlanner(Planner):
    """
    Grid A* with soft obstacle inflation and a lane-change penalty.

    Edge cost is the step length, plus ``lambda_obs`` per meter of incursion into
    the inflation radius of the nearest obstacle (integrated over the step), plus
    ``lambda_lc`` when the step crosses from a lane into its left or right
    neighbor. Nodes within the blocking radius of an obstacle are not entered.
    Moving participants are also placed at their predicted poses up to
    ``predict_horizon_s`` ahead; a horizon of 0 treats them as stationary.
    """

    def __init__(self, params: Optional[PlannerParams] = None, name: str = "default"):
        self.params = params or PlannerParams()
        self.name = name
        self._lattices: Dict[Tuple[str, float], Lattice] = {}
        self._last_field: Optional[CostField] = None
        self._last_path: Optional[PlannedPath] = None

    def describe(self) -> Dict[str, object]:
        return {"name": self.name, **self.params.model_dump()}

    def reset(self, road_map: RoadMap, rng_seed: int) -> None:
        self._last_field = None
        self._last_path = None

    def lattice_for(self, road_map: RoadMap, ego_width: float) -> Lattice:
        key = (road_map.id, ego_width)
        lattice = self._lattices.get(key)
        if lattice is None:
            lattice = Lattice(road_map, self.params.resolution, ego_width)
            self._lattices[key] = lattice
        return lattice

    def obstacle_polygons(self, view: WorldView) -> List[Polygon]:
        horizon = self.params.predict_horizon_s
        polys: List[Polygon] = []
        for pid in sorted(view.participants):
            footprint = view.footprints[pid]
            polys.append(rectangle_polygon(view.participants[pid].pose, footprint))
            for future in view.predicted.get(pid, ()):
                if future.t - view.t <= horizon + 1e-9:
                    polys.append(rectangle_polygon(future.pose, footprint))
        return polys

    def cost_field(self, lattice: Lattice, polys: Sequence[Polygon], ego_width: float) -> CostField:
        block_r = self.params.block_radius(ego_width)
        infl_r = self.params.inflation_radius(ego_width)
        res = lattice.resolution
        dist = np.full((lattice.ny, lattice.nx), np.inf)
        for poly in polys:
            minx, miny, maxx, maxy = poly.bounds
            x_lo = max(0, int(math.floor((minx - infl_r - lattice.x0) / res)))
            x_hi = min(lattice.nx, int(math.ceil((maxx + infl_r - lattice.x0) / res)) + 1)
            y_lo = max(0, int(math.floor((miny - infl_r - lattice.y0) / res)))
            y_hi = min(lattice.ny, int(math.ceil((maxy + infl_r - lattice.y0) / res)) + 1)
            if x_lo >= x_hi or y_lo >= y_hi:
                continue
            window = lattice.points[y_lo:y_hi, x_lo:x_hi]
            d = shapely.distance(poly, window)
            np.minimum(dist[y_lo:y_hi, x_lo:x_hi], d, out=dist[y_lo:y_hi, x_lo:x_hi])
        blocked = ~lattice.free | (dist < block_r)
        penalty = self.params.lambda_obs * np.clip(infl_r - dist, 0.0, None)
        return CostField(blocked=blocked, penalty=penalty)

    def _astar(self, lattice: Lattice, field: CostField, start: Tuple[int, int], goal: Tuple[int, int]):
        nx, ny, res = lattice.nx, lattice.ny, lattice.resolution
        blocked = field.blocked.ravel().tolist()
        penalty = field.penalty.ravel().tolist()
        lanes = lattice.lane_index.ravel().tolist()
        neighbors = lattice.neighbors
        lambda_lc = self.params.lambda_lc
        gx, gy = goal
        start_id, goal_id = start[1] * nx + start[0], gy * nx + gx

        g = {start_id: 0.0}
        came_from: Dict[int, int] = {}
        closed = set()
        open_list = [(res * math.hypot(start[0] - gx, start[1] - gy), start[1], start[0], start_id)]
        while open_list:
            _, iy, ix, node = heapq.heappop(open_list)
            if node in closed:
                continue
            if node == goal_id:
                path = [node]
                while node in came_from:
                    node = came_from[node]
                    path.append(node)
                return path[::-1], g[goal_id]
            closed.add(node)
            g_node = g[node]
            lane_u = lanes[node]
            for dx, dy, step in NEIGHBORS:
                jx, jy = ix + dx, iy + dy
                if jx < 0 or jy < 0 or jx >= nx or jy >= ny:
                    continue
                nxt = jy * nx + jx
                if blocked[nxt] or nxt in closed:
                    continue
                length = step * res
                cost = g_node + length * (1.0 + penalty[nxt])
                lane_v = lanes[nxt]
                if lane_u != lane_v and lane_u >= 0 and lane_v >= 0 and neighbors[lane_u][lane_v]:
                    cost += lambda_lc
                if cost < g.get(nxt, math.inf):
                    g[nxt] = cost
                    came_from[nxt] = node
                    heapq.heappush(open_list, (cost + res * math.hypot(jx - gx, jy - gy), jy, jx, nxt))
        return None, math.inf

    def search(self, view: WorldView, field: Optional[CostField] = None) -> Tuple[List[Point2], float]:
        """
        Optimal lattice route for ``view`` and its cost.

        Raises:
            NoRouteError: If the start or goal has no free node nearby or no path joins them.
        """
        lattice = self.lattice_for(view.road_map, view.ego_footprint.width)
        if field is None:
            field = self.cost_field(lattice, self.obstacle_polygons(view), view.ego_footprint.width)
        free = ~field.blocked
        start = lattice.nearest(view.ego.position, free, self.params.start_search_radius)
        if start is None:
            raise NoRouteError(self.name, "no free lattice node near the ego")
        goal = lattice.nearest(view.destination, free, view.goal_radius)
        if goal is None:
            raise NoRouteError(self.name, "destination is blocked")
        nodes, cost = self._astar(lattice, field, start, goal)
        if nodes is None:
            raise NoRouteError(self.name, "lattice search exhausted")
        nx = lattice.nx
        return [lattice.point_of(n % nx, n // nx) for n in nodes], cost

    def plan_cost(self, view: WorldView) -> float:
        """Optimal lattice cost, or infinity when there is no route."""
        try:
            return self.search(view)[1]
        except NoRouteError:
            return math.inf

    def _speed_profile(self, points: Sequence[Point2]) -> Tuple[float, ...]:
        arr = np.array([p.as_tuple() for p in points])
        seg = np.hypot(*np.diff(arr, axis=0).T)
        remaining = np.concatenate((np.cumsum(seg[::-1])[::-1], [0.0]))
        speeds = np.minimum(self.params.cruise_speed, np.sqrt(2.0 * self.params.comfort_decel * remaining))
        return tuple(float(v) for v in speeds)

    def _reuse(self, view: WorldView, field: CostField) -> Optional[PlannedPath]:
        last = self._last_path
        if last is None or not field.same_as(self._last_field):
            return None
        ego = view.ego.position
        line = LineString([p.as_tuple() for p in last.points])
        if line.distance(Point(ego.x, ego.y)) > self.params.reuse_tolerance:
            return None
        d = [math.hypot(p.x - ego.x, p.y - ego.y) for p in last.points]
        nearest = int(np.argmin(d))
        keep = min(nearest + 1, len(last.points) - 1)
        return PlannedPath((ego,) + last.points[keep:], (last.speeds[nearest],) + last.speeds[keep:])

    def plan(self, view: WorldView) -> PlannedPath:
        lattice = self.lattice_for(view.road_map, view.ego_footprint.width)
        field = self.cost_field(lattice, self.obstacle_polygons(view), view.ego_footprint.width)
        reused = self._reuse(view, field)
        if reused is not None:
            return reused
        self._last_field, self._last_path = None, None
        route, _ = self.search(view, field)
        points = [view.ego.position] + route
        path = PlannedPath(tuple(points), self._speed_profile(points))
        self._last_field, self._last_path = field, path
        return path


def count_lane_changes(road_map: RoadMap, points: Sequence[Point2]) -> int:
    """Transitions between left/right neighbor lanes along a sequence of points."""
    changes = 0
    previous = None
    for p in points:
        lane = road_map.nearest_lane(p)
        neighbors = (previous.left_neighbor, previous.right_neighbor) if previous is not None else ()
        if previous is not None and lane.id != previous.id and lane.id in neighbors:
            changes += 1
        previous = lane
    return changes


__all__ = ["Lattice", "CostField", "LatticePlanner", "count_lane_changes"]
