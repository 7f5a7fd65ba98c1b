"""Brute-force raster check of the polygon booleans used by the feasible area."""

import math

import numpy as np
import shapely

from matilda_detour.geometry import Footprint, Pose, region_difference, sector_from_state, swept_region


def raster_agreement(rng: np.random.Generator, cell: float = 0.05) -> float:
    """Fraction of raster cells where (sector - sweep) agrees with the analytic membership."""
    heading = rng.uniform(-math.pi, math.pi)
    origin = rng.uniform(-5, 5, 2)
    radius = rng.uniform(2.0, 5.0)
    half_angle = rng.uniform(0.2, 1.2)
    sector = sector_from_state(Pose.at(origin[0], origin[1], heading), radius, half_angle, 1.0)

    sweep_heading = rng.uniform(-math.pi, math.pi)
    sweep_start = origin + rng.uniform(-3, 3, 2)
    sweep_len = rng.uniform(0.0, 4.0)
    fp = Footprint(rng.uniform(1.0, 4.0), rng.uniform(0.5, 2.0))
    direction = np.array([math.cos(sweep_heading), math.sin(sweep_heading)])
    sweep_end = sweep_start + sweep_len * direction
    swept = swept_region(
        [Pose.at(*sweep_start, sweep_heading), Pose.at(*sweep_end, sweep_heading)],
        fp,
    )
    result = region_difference(sector, swept)

    xs = np.arange(origin[0] - radius, origin[0] + radius, cell) + cell / 2
    ys = np.arange(origin[1] - radius, origin[1] + radius, cell) + cell / 2
    gx, gy = np.meshgrid(xs, ys)
    dx, dy = gx - origin[0], gy - origin[1]
    bearing = np.arctan2(dy, dx) - heading
    bearing = np.arctan2(np.sin(bearing), np.cos(bearing))
    in_sector = (np.hypot(dx, dy) <= radius) & (np.abs(bearing) <= half_angle)
    rx, ry = gx - sweep_start[0], gy - sweep_start[1]
    along = rx * direction[0] + ry * direction[1]
    across = -rx * direction[1] + ry * direction[0]
    in_sweep = (along >= -fp.length / 2) & (along <= sweep_len + fp.length / 2) & (np.abs(across) <= fp.width / 2)
    expected = in_sector & ~in_sweep

    if result.is_empty:
        actual = np.zeros_like(expected)
    else:
        actual = shapely.contains_xy(result.geometry, gx, gy)
    return float(np.mean(actual == expected))


__all__ = ["raster_agreement"]
