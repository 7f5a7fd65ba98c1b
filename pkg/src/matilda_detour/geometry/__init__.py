"""Planar geometry: value types, polygon regions and vehicle-shaped areas."""

from .primitives import Footprint, Point2, Pose, angle_diff, normalize_angle
from .region import Region, contains, region_difference, region_intersection, region_union, sample_point
from .shapes import (
    oriented_rectangle,
    rectangle_corners,
    rectangle_polygon,
    rectangles_overlap,
    sector_from_state,
    swept_region,
)

__all__ = [
    "Footprint",
    "Point2",
    "Pose",
    "Region",
    "angle_diff",
    "contains",
    "normalize_angle",
    "oriented_rectangle",
    "rectangle_corners",
    "rectangle_polygon",
    "rectangles_overlap",
    "region_difference",
    "region_intersection",
    "region_union",
    "sample_point",
    "sector_from_state",
    "swept_region",
]
