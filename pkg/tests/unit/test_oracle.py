"""Tests for the grid abstraction and the consistency oracle."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from shapely.geometry import LineString, box

from matilda_detour.config import GridSpec
from matilda_detour.core.exceptions import BothEmptyError
from matilda_detour.core.types import OutcomeStatus
from matilda_detour.geometry import Point2
from matilda_detour.oracle import (
    ConsistencyVerdict,
    GridCellSet,
    consistency_check,
    covered_grids,
    grid_similarity,
    is_nods,
)
from matilda_detour.scenario import DrivingPath
from matilda_detour.simulator import TaskOutcome

pytestmark = pytest.mark.unit

UNIT_GRID = GridSpec(cell_size=1.0, origin=(0.0, 0.0))

cell_sets = st.sets(st.tuples(st.integers(-6, 6), st.integers(-6, 6)), max_size=30).map(GridCellSet.of)

# Multiples of 1/8 keep every subtraction and division below exact in binary floating point.
eighths = st.integers(-320, 320).map(lambda k: k / 8.0)
dyadic_paths = st.lists(st.tuples(eighths, eighths), min_size=1, max_size=8)
paths = st.lists(
    st.tuples(st.floats(-50.0, 50.0, allow_nan=False), st.floats(-50.0, 50.0, allow_nan=False)),
    min_size=1,
    max_size=8,
)


def boxes_touched(x0, y0, x1, y1):
    """Cells whose closed unit box meets the segment, by brute force."""
    line = LineString([(x0, y0), (x1, y1)])
    cells = set()
    for i in range(math.floor(min(x0, x1)) - 1, math.floor(max(x0, x1)) + 2):
        for j in range(math.floor(min(y0, y1)) - 1, math.floor(max(y0, y1)) + 2):
            if box(i, j, i + 1, j + 1).intersects(line):
                cells.add((i, j))
    return cells


class TestCoveredGrids:
    def test_points_map_to_floor_cells(self):
        cells = covered_grids([(0.5, 0.5), (0.9, 0.2)], UNIT_GRID)
        assert set(cells) == {(0, 0)}

    def test_cell_size_and_origin(self):
        spec = GridSpec(cell_size=2.0, origin=(10.0, -4.0))
        assert set(covered_grids([(13.0, -3.0), (13.5, -3.0)], spec)) == {(1, 0)}

    def test_diagonal_through_corners(self):
        cells = covered_grids([(0.0, 0.0), (2.0, 2.0)], UNIT_GRID)
        assert set(cells) == {(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2)}

    def test_long_segment_fills_the_gap(self):
        cells = covered_grids([(0.5, 0.5), (5.5, 0.5)], UNIT_GRID)
        assert set(cells) == {(i, 0) for i in range(6)}

    def test_negative_coordinates(self):
        cells = covered_grids([(-1.5, -0.5), (0.5, -0.5)], UNIT_GRID)
        assert set(cells) == {(-2, -1), (-1, -1), (0, -1)}

    def test_single_point_and_empty_path(self):
        assert set(covered_grids(np.array([[3.2, 4.7]]), UNIT_GRID)) == {(3, 4)}
        assert len(covered_grids(np.zeros((0, 2)), UNIT_GRID)) == 0

    def test_driving_path_input(self):
        path = DrivingPath((Point2(0.5, 0.5), Point2(2.5, 0.5)))
        assert set(covered_grids(path, UNIT_GRID)) == {(0, 0), (1, 0), (2, 0)}

    def test_default_spec_anchors_at_zero(self):
        assert set(covered_grids([(1.0, 1.0), (1.5, 1.5)], GridSpec())) == {(0, 0)}

    def test_supercover_matches_closed_box_intersection(self, rng):
        for _ in range(500):
            x0, y0, x1, y1 = rng.uniform(-7.0, 7.0, 4)
            assert set(covered_grids([(x0, y0), (x1, y1)], UNIT_GRID)) == boxes_touched(x0, y0, x1, y1)

    @pytest.mark.property
    @settings(max_examples=1000, deadline=None)
    @given(dyadic_paths, eighths, eighths, eighths, eighths, st.sampled_from([0.5, 1.0, 2.0]))
    def test_shifting_path_and_origin_together(self, path, ox, oy, dx, dy, cell_size):
        spec = GridSpec(cell_size=cell_size, origin=(ox, oy))
        shifted_spec = GridSpec(cell_size=cell_size, origin=(ox + dx, oy + dy))
        shifted = [(x + dx, y + dy) for x, y in path]
        assert covered_grids(shifted, shifted_spec) == covered_grids(path, spec)


class TestSimilarity:
    def test_identical_paths(self):
        path = [(0.5, 0.5), (4.5, 2.5)]
        assert consistency_check(path, path, UNIT_GRID, 0.6).similarity == 1.0

    def test_disjoint_paths(self):
        a = [(0.5, 0.5), (1.5, 0.5)]
        b = [(0.5, 5.5), (1.5, 5.5)]
        assert consistency_check(a, b, UNIT_GRID, 0.0).similarity == 0.0

    def test_both_empty(self):
        with pytest.raises(BothEmptyError):
            grid_similarity(GridCellSet(), GridCellSet())

    def test_one_empty(self):
        assert grid_similarity(GridCellSet(), GridCellSet.of([(0, 0)])) == 0.0

    def test_threshold_equality_is_a_violation(self):
        a = [(0.5, 0.5), (3.5, 0.5)]
        b = [(0.5, 0.5), (2.5, 0.5), (2.5, 1.5)]
        at_threshold = consistency_check(a, b, UNIT_GRID, 0.6)
        assert at_threshold.similarity == 0.6
        assert not at_threshold.consistent
        assert consistency_check(a, b, UNIT_GRID, 0.59).consistent

    @pytest.mark.property
    @settings(max_examples=1000, deadline=None)
    @given(cell_sets, cell_sets)
    def test_jaccard_properties(self, a, b):
        if len(a) == 0 and len(b) == 0:
            return
        sim = grid_similarity(a, b)
        assert 0.0 <= sim <= 1.0
        assert sim == grid_similarity(b, a)
        assert (sim == 1.0) == (a.cells == b.cells)
        assert sim == len(a & b) / len(a | b)

    @pytest.mark.property
    @settings(max_examples=1000, deadline=None)
    @given(paths, st.floats(0.0, 1.0, exclude_max=True), st.sampled_from([0.5, 1.0, 2.0]))
    def test_path_is_consistent_with_itself(self, path, epsilon, cell_size):
        verdict = consistency_check(path, path, GridSpec(cell_size=cell_size, origin=(0.0, 0.0)), epsilon)
        assert verdict.similarity == 1.0
        assert verdict.consistent


class TestVerdict:
    def test_judge(self):
        assert ConsistencyVerdict.judge(0.7, 0.6).consistent
        assert not ConsistencyVerdict.judge(0.6, 0.6).consistent

    @pytest.mark.parametrize(
        "status,similarity,expected",
        [
            (OutcomeStatus.COMPLETED, 0.3, True),
            (OutcomeStatus.COMPLETED, 0.9, False),
            (OutcomeStatus.COLLISION, 0.3, False),
            (OutcomeStatus.TIMEOUT, 0.3, False),
            (OutcomeStatus.STUCK, 0.3, False),
        ],
    )
    def test_is_nods(self, status, similarity, expected):
        verdict = ConsistencyVerdict.judge(similarity, 0.6)
        assert is_nods(TaskOutcome(status, 12.0), verdict) is expected
