"""Grid abstraction of driving paths and the Jaccard index over covered cells."""

import math
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, Set, Tuple

from ..config.schema import GridSpec
from ..core.exceptions import BothEmptyError
from ..scenario import PathLike, path_array

Cell = Tuple[int, int]


@dataclass(frozen=True)
class GridCellSet:
    cells: FrozenSet[Cell] = frozenset()

    @classmethod
    def of(cls, cells: Iterable[Cell]) -> "GridCellSet":
        return cls(frozenset((int(i), int(j)) for i, j in cells))

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(sorted(self.cells))

    def __contains__(self, cell: object) -> bool:
        return cell in self.cells

    def __and__(self, other: "GridCellSet") -> "GridCellSet":
        return GridCellSet(self.cells & other.cells)

    def __or__(self, other: "GridCellSet") -> "GridCellSet":
        return GridCellSet(self.cells | other.cells)


def _segment_cells(x0: float, y0: float, x1: float, y1: float) -> Set[Cell]:
    """Every unit cell the segment touches (supercover), in grid units."""
    ix, iy = math.floor(x0), math.floor(y0)
    end = (math.floor(x1), math.floor(y1))
    cells = {(ix, iy), end}
    dx, dy = x1 - x0, y1 - y0
    sx = 1 if dx > 0 else -1 if dx < 0 else 0
    sy = 1 if dy > 0 else -1 if dy < 0 else 0
    if sx > 0:
        tx = (ix + 1 - x0) / dx
    elif sx < 0:
        tx = (x0 - ix) / -dx
    else:
        tx = math.inf
    if sy > 0:
        ty = (iy + 1 - y0) / dy
    elif sy < 0:
        ty = (y0 - iy) / -dy
    else:
        ty = math.inf
    step_x = 1.0 / abs(dx) if sx else math.inf
    step_y = 1.0 / abs(dy) if sy else math.inf

    for _ in range(abs(end[0] - ix) + abs(end[1] - iy) + 2):
        if (ix, iy) == end:
            break
        if abs(tx - ty) <= 1e-12:
            if tx > 1.0:
                break
            # through a corner: both side cells touch the segment at that point
            cells.add((ix + sx, iy))
            cells.add((ix, iy + sy))
            ix, iy = ix + sx, iy + sy
            tx += step_x
            ty += step_y
        elif tx < ty:
            if tx > 1.0:
                break
            ix += sx
            tx += step_x
        else:
            if ty > 1.0:
                break
            iy += sy
            ty += step_y
        cells.add((ix, iy))
    return cells


def covered_grids(path: PathLike, spec: GridSpec) -> GridCellSet:
    """
    Cells of ``spec`` covered by a path.

    Each point maps to ``floor((p - origin) / cell_size)``, and every cell crossed by
    the segment between consecutive points is included as well.
    """
    arr = path_array(path)
    if arr.size == 0:
        return GridCellSet()
    origin = spec.origin_point
    u = (arr[:, 0] - origin.x) / spec.cell_size
    v = (arr[:, 1] - origin.y) / spec.cell_size
    cells: Set[Cell] = {(math.floor(u[0]), math.floor(v[0]))}
    for k in range(1, len(u)):
        cells |= _segment_cells(u[k - 1], v[k - 1], u[k], v[k])
    return GridCellSet(frozenset(cells))


def grid_similarity(a: GridCellSet, b: GridCellSet) -> float:
    """
    Jaccard index of two cell sets.

    Raises:
        BothEmptyError: If both sets are empty.
    """
    union = len(a.cells | b.cells)
    if union == 0:
        raise BothEmptyError()
    return len(a.cells & b.cells) / union


__all__ = ["Cell", "GridCellSet", "covered_grids", "grid_similarity"]
