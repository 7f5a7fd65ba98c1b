"""Planar regions as sets of interior-disjoint simple polygons.

Booleans are delegated to shapely (GEOS) with every result snapped to a 1e-7 m
precision grid, then re-normalized: holes are cut away so each piece is a simple
counter-clockwise ring, and slivers below ``MIN_AREA`` are dropped.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
import shapely
from shapely.geometry import MultiPolygon, Polygon, box
from shapely.geometry.base import BaseGeometry
from shapely.geometry.polygon import orient

from ..core.exceptions import EmptyRegionError
from .primitives import Point2

GRID_SIZE = 1e-7
MIN_AREA = 1e-9

PointLike = Union[Point2, Tuple[float, float]]


def _xy(p: PointLike) -> Tuple[float, float]:
    if isinstance(p, Point2):
        return (p.x, p.y)
    return (float(p[0]), float(p[1]))


def _polygons_of(geom: Optional[BaseGeometry]) -> Iterator[Polygon]:
    """Yield every polygon in an arbitrarily nested geometry; drop lines and points."""
    if geom is None or geom.is_empty:
        return
    if isinstance(geom, Polygon):
        yield geom
    elif hasattr(geom, "geoms"):
        for part in geom.geoms:
            yield from _polygons_of(part)


def _split_holes(poly: Polygon) -> List[Polygon]:
    """Cut a polygon with holes into hole-free pieces along vertical lines."""
    if not poly.interiors:
        return [poly]
    hole_x = Polygon(poly.interiors[0]).representative_point().x
    minx, miny, maxx, maxy = poly.bounds
    halves = (box(minx - 1.0, miny - 1.0, hole_x, maxy + 1.0), box(hole_x, miny - 1.0, maxx + 1.0, maxy + 1.0))
    pieces: List[Polygon] = []
    for half in halves:
        for part in _polygons_of(shapely.intersection(poly, half, grid_size=GRID_SIZE)):
            pieces.extend(_split_holes(part))
    return pieces


def _normalize(geom: Optional[BaseGeometry]) -> Tuple[Polygon, ...]:
    polys = list(_polygons_of(geom))
    if not polys:
        return ()
    polys = [p if p.is_valid else shapely.make_valid(p) for p in polys]
    merged = shapely.union_all(polys, grid_size=GRID_SIZE)
    pieces: List[Polygon] = []
    for poly in _polygons_of(merged):
        for piece in _split_holes(poly):
            if piece.area > MIN_AREA:
                pieces.append(orient(piece, sign=1.0))
    return tuple(pieces)


@dataclass(frozen=True, eq=False)
class Region:
    """
    A closed planar area made of interior-disjoint, hole-free polygons.

    Build regions with ``from_geometry``/``from_rings``; the constructor assumes its
    pieces are already normalized.
    """

    pieces: Tuple[Polygon, ...] = ()

    @classmethod
    def empty(cls) -> "Region":
        return cls(())

    @classmethod
    def from_geometry(cls, geom: Optional[BaseGeometry]) -> "Region":
        return cls(_normalize(geom))

    @classmethod
    def from_rings(cls, rings: Iterable[Sequence[PointLike]]) -> "Region":
        polys = [Polygon([_xy(p) for p in ring]) for ring in rings if len(ring) >= 3]
        return cls.from_geometry(MultiPolygon(polys) if len(polys) > 1 else (polys[0] if polys else None))

    @property
    def polygons(self) -> List[List[Point2]]:
        """Counter-clockwise vertex rings, without the closing vertex."""
        return [[Point2(x, y) for x, y in piece.exterior.coords[:-1]] for piece in self.pieces]

    @cached_property
    def geometry(self) -> BaseGeometry:
        """The region as one shapely geometry; cut lines between pieces are dissolved."""
        if not self.pieces:
            return Polygon()
        return shapely.union_all(self.pieces, grid_size=GRID_SIZE)

    @cached_property
    def _area(self) -> float:
        return float(sum(piece.area for piece in self.pieces))

    def area(self) -> float:
        return self._area

    @property
    def is_empty(self) -> bool:
        return not self.pieces

    @property
    def bounds(self) -> Tuple[float, float, float, float]:
        return tuple(self.geometry.bounds)  # type: ignore[return-value]

    @cached_property
    def _triangles(self) -> Tuple[np.ndarray, np.ndarray]:
        """Triangle vertex array of shape (n, 3, 2) and the cumulative areas."""
        coords: List[np.ndarray] = []
        for piece in self.pieces:
            for tri in _polygons_of(shapely.constrained_delaunay_triangles(piece)):
                coords.append(np.asarray(tri.exterior.coords[:3], dtype=float))
        if not coords:
            return np.zeros((0, 3, 2)), np.zeros(0)
        tris = np.stack(coords)
        ab = tris[:, 1] - tris[:, 0]
        ac = tris[:, 2] - tris[:, 0]
        areas = 0.5 * np.abs(ab[:, 0] * ac[:, 1] - ab[:, 1] * ac[:, 0])
        return tris, np.cumsum(areas)

    def __repr__(self) -> str:
        return f"Region(pieces={len(self.pieces)}, area={self.area():.6g})"


def region_union(regions: Iterable[Region]) -> Region:
    geoms = [r.geometry for r in regions if not r.is_empty]
    if not geoms:
        return Region.empty()
    return Region.from_geometry(shapely.union_all(geoms, grid_size=GRID_SIZE))


def region_difference(a: Region, b: Region) -> Region:
    """Points of ``a`` that are not in ``b``."""
    if a.is_empty or b.is_empty:
        return a
    return Region.from_geometry(shapely.difference(a.geometry, b.geometry, grid_size=GRID_SIZE))


def region_intersection(regions: Sequence[Region]) -> Region:
    """Points common to every region; an empty list yields the empty region."""
    if not regions:
        return Region.empty()
    result = regions[0]
    for other in regions[1:]:
        if result.is_empty or other.is_empty:
            return Region.empty()
        result = Region.from_geometry(shapely.intersection(result.geometry, other.geometry, grid_size=GRID_SIZE))
    return result


def contains(region: Region, p: PointLike) -> bool:
    x, y = _xy(p)
    if region.is_empty:
        return False
    return bool(shapely.contains_xy(region.geometry, x, y))


def sample_point(region: Region, rng: np.random.Generator, max_tries: int = 32) -> Point2:
    """
    Draw an area-uniform point strictly inside ``region``.

    A triangle is chosen with probability proportional to its area and a uniform
    barycentric point is drawn inside it. Draws that land on a boundary are redrawn.

    Raises:
        EmptyRegionError: If the region has no area.
    """
    if region.area() <= 0:
        raise EmptyRegionError("sample_point")
    tris, cumulative = region._triangles
    total = float(cumulative[-1])
    for _ in range(max_tries):
        idx = int(np.searchsorted(cumulative, rng.random() * total, side="right"))
        idx = min(idx, len(cumulative) - 1)
        r1, r2 = rng.random(2)
        if r1 + r2 > 1.0:
            r1, r2 = 1.0 - r1, 1.0 - r2
        a, b, c = tris[idx]
        x, y = a + r1 * (b - a) + r2 * (c - a)
        if contains(region, (x, y)):
            return Point2(float(x), float(y))
    # centroid of the largest triangle is interior to it
    areas = np.diff(np.concatenate(([0.0], cumulative)))
    largest = tris[int(np.argmax(areas))]
    cx, cy = largest.mean(axis=0)
    if contains(region, (cx, cy)):
        return Point2(float(cx), float(cy))
    rep = region.pieces[0].representative_point()
    return Point2(float(rep.x), float(rep.y))


__all__ = [
    "Region",
    "GRID_SIZE",
    "MIN_AREA",
    "region_union",
    "region_difference",
    "region_intersection",
    "contains",
    "sample_point",
]
