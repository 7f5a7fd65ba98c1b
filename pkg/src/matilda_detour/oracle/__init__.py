"""Grid-abstraction consistency oracle."""

from .consistency import ConsistencyVerdict, consistency_check, is_nods
from .grid import Cell, GridCellSet, covered_grids, grid_similarity

__all__ = [
    "Cell",
    "ConsistencyVerdict",
    "GridCellSet",
    "consistency_check",
    "covered_grids",
    "grid_similarity",
    "is_nods",
]
