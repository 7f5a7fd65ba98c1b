"""Planar value types: points, poses and vehicle footprints."""

import math
from dataclasses import dataclass
from typing import Tuple

TWO_PI = 2.0 * math.pi


def normalize_angle(theta: float) -> float:
    """Wrap an angle in radians into (-pi, pi]."""
    wrapped = math.remainder(theta, TWO_PI)
    if wrapped <= -math.pi:
        wrapped += TWO_PI
    return wrapped


def angle_diff(a: float, b: float) -> float:
    """Signed smallest difference a - b, in (-pi, pi]."""
    return normalize_angle(a - b)


@dataclass(frozen=True, slots=True)
class Point2:
    """A position in the planar map frame, in meters."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"Point2 coordinates must be finite, got ({self.x}, {self.y})")

    def distance_to(self, other: "Point2") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def bearing_to(self, other: "Point2") -> float:
        return math.atan2(other.y - self.y, other.x - self.x)

    def as_tuple(self) -> Tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True, slots=True)
class Pose:
    """A position plus a heading normalized into (-pi, pi]."""

    position: Point2
    heading: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "heading", normalize_angle(self.heading))

    @classmethod
    def at(cls, x: float, y: float, heading: float = 0.0) -> "Pose":
        return cls(Point2(x, y), heading)


@dataclass(frozen=True, slots=True)
class Footprint:
    """Rectangular extent of a vehicle or obstacle; length runs along the heading."""

    length: float
    width: float

    def __post_init__(self) -> None:
        if not (self.length > 0 and self.width > 0):
            raise ValueError(f"Footprint dimensions must be positive, got {self.length} x {self.width}")

    @property
    def circumradius(self) -> float:
        """Half the diagonal: every point of the footprint lies within it of the center."""
        return 0.5 * math.hypot(self.length, self.width)


__all__ = ["Point2", "Pose", "Footprint", "normalize_angle", "angle_diff", "TWO_PI"]
