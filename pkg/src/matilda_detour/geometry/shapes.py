"""Vehicle-shaped regions: oriented rectangles, kinematic sectors and swept corridors."""

import math
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
import shapely
from shapely.geometry import MultiPoint, Polygon

from .primitives import Footprint, Pose
from .region import GRID_SIZE, Region

SECTOR_CHORDS = 64

Corners = Tuple[Tuple[float, float], Tuple[float, float], Tuple[float, float], Tuple[float, float]]


def rectangle_corners(pose: Pose, footprint: Footprint, inflation: float = 0.0) -> Corners:
    """Corners of a footprint centered on ``pose``, counter-clockwise from front-right."""
    hl = 0.5 * footprint.length + inflation
    hw = 0.5 * footprint.width + inflation
    c, s = math.cos(pose.heading), math.sin(pose.heading)
    px, py = pose.position.x, pose.position.y
    return (
        (px + hl * c + hw * s, py + hl * s - hw * c),
        (px + hl * c - hw * s, py + hl * s + hw * c),
        (px - hl * c - hw * s, py - hl * s + hw * c),
        (px - hl * c + hw * s, py - hl * s - hw * c),
    )


def rectangle_polygon(pose: Pose, footprint: Footprint, inflation: float = 0.0) -> Polygon:
    return Polygon(rectangle_corners(pose, footprint, inflation))


def oriented_rectangle(pose: Pose, footprint: Footprint, inflation: float = 0.0) -> Region:
    return Region.from_geometry(rectangle_polygon(pose, footprint, inflation))


def _projection(corners: Sequence[Tuple[float, float]], ax: float, ay: float) -> Tuple[float, float]:
    values = [x * ax + y * ay for x, y in corners]
    return min(values), max(values)


def rectangles_overlap(a: Sequence[Tuple[float, float]], b: Sequence[Tuple[float, float]]) -> bool:
    """Separating-axis test for two convex quadrilaterals; touching edges do not overlap."""
    for corners in (a, b):
        for i in range(2):
            x0, y0 = corners[i]
            x1, y1 = corners[i + 1]
            ax, ay = -(y1 - y0), x1 - x0
            amin, amax = _projection(a, ax, ay)
            bmin, bmax = _projection(b, ax, ay)
            if amax <= bmin or bmax <= amin:
                return False
    return True


def sector_from_state(pose: Pose, speed_max: float, steer_max: float, dt: float) -> Region:
    """
    Reachable-set over-approximation of a vehicle within ``dt``.

    A circular sector of radius ``speed_max * dt`` around ``pose.position``,
    bisected by the heading with half-angle ``steer_max``, drawn as a fan of
    ``SECTOR_CHORDS`` chords. Zero speed or zero duration gives the empty region.
    """
    radius = speed_max * dt
    if not radius > 0 or not steer_max > 0:
        return Region.empty()
    angles = np.linspace(pose.heading - steer_max, pose.heading + steer_max, SECTOR_CHORDS + 1)
    px, py = pose.position.x, pose.position.y
    ring = [(px, py)] + [(px + radius * math.cos(a), py + radius * math.sin(a)) for a in angles]
    return Region.from_geometry(Polygon(ring))


def _dedupe(poses: Iterable[Pose]) -> List[Pose]:
    kept: List[Pose] = []
    for pose in poses:
        if kept and kept[-1] == pose:
            continue
        kept.append(pose)
    return kept


def swept_geometry(
    path_segment: Sequence[Pose], footprint: Footprint, inflation: float = 0.0
) -> Optional[shapely.Geometry]:
    """Shapely geometry behind ``swept_region``; ``None`` for an empty segment."""
    poses = _dedupe(path_segment)
    if not poses:
        return None
    corners = [rectangle_corners(p, footprint) for p in poses]
    parts: List[shapely.Geometry] = [Polygon(c) for c in corners]
    for first, second in zip(corners, corners[1:]):
        parts.append(MultiPoint(first + second).convex_hull)
    geom = shapely.union_all(parts, grid_size=GRID_SIZE)
    if inflation > 0:
        geom = geom.buffer(inflation, join_style="mitre")
    return geom


def swept_region(path_segment: Sequence[Pose], footprint: Footprint, inflation: float = 0.0) -> Region:
    """
    Area covered by a footprint moving along ``path_segment``.

    The union of the footprint rectangle at every pose and of the convex hull of each
    consecutive rectangle pair, grown by ``inflation`` with mitred corners.
    """
    return Region.from_geometry(swept_geometry(path_segment, footprint, inflation))


__all__ = [
    "SECTOR_CHORDS",
    "rectangle_corners",
    "rectangle_polygon",
    "oriented_rectangle",
    "rectangles_overlap",
    "sector_from_state",
    "swept_geometry",
    "swept_region",
]
