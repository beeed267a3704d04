"""Initial dominant points: chain-code breaks and the delta generalization."""

import pytest

from polyapprox import (SegmentationSource, break_points_real, build_curve,
                        initial_dominant_points, rotate_curve)
from polyapprox.errors import NotOnGrid, OpenCurveWrap

from conftest import random_grid_curves


def brute_breaks(curve):
    """Independent re-derivation: compare successive deltas directly."""
    pts = curve.points
    n = curve.n
    out = []
    for i in range(n):
        ax, ay = pts[(i - 1) % n]
        bx, by = pts[i]
        cx, cy = pts[(i + 1) % n]
        if (bx - ax, by - ay) != (cx - bx, cy - by):
            out.append(i)
    return tuple(out)


def test_square_ring_corners(square_ring):
    seg = initial_dominant_points(square_ring)
    assert seg.dp_indices == (0, 2, 4, 6)
    assert seg.source is SegmentationSource.CHAIN_CODE_BREAKS


def test_straight_run_has_no_interior_breaks():
    # long flat rectangle: interior edge points all have constant code
    pts = [(x, 0) for x in range(6)] + [(5, 1)] + \
          [(x, 2) for x in range(5, -1, -1)] + [(0, 1)]
    curve = build_curve(pts, closed=True)
    seg = initial_dominant_points(curve)
    for i in seg.dp_indices:
        assert i in (0, 5, 6, 7, 12, 13)  # corners and their wrap steps only
    for x in range(1, 5):  # interior of the flat runs
        assert pts.index((x, 0)) not in seg.dp_indices
        assert pts.index((x, 2)) not in seg.dp_indices


def test_octagon_matches_brute_force(octagon16):
    seg = initial_dominant_points(octagon16)
    assert seg.dp_indices == brute_breaks(octagon16)
    assert len(seg.dp_indices) == 8


def test_random_curves_match_brute_force():
    for curve in random_grid_curves(seed=23, count=10):
        assert initial_dominant_points(curve).dp_indices == brute_breaks(curve)


def test_requires_grid_and_closed(quarter_circle):
    rotated = rotate_curve(build_curve([(0, 0), (1, 0), (1, 1)], closed=True), 30)
    with pytest.raises(NotOnGrid):
        initial_dominant_points(rotated)
    with pytest.raises(OpenCurveWrap):
        initial_dominant_points(quarter_circle)


def test_real_equals_chain_code_on_grid(square_ring, octagon16):
    for curve in (square_ring, octagon16, *random_grid_curves(seed=5, count=10)):
        assert break_points_real(curve, 1e-9).dp_indices == \
            initial_dominant_points(curve).dp_indices
    # consistency also holds at a much coarser tolerance
    assert break_points_real(square_ring, 0.5).dp_indices == \
        initial_dominant_points(square_ring).dp_indices


def test_real_breaks_source(square_ring):
    assert break_points_real(square_ring).source is SegmentationSource.DELTA_BREAKS


def test_rotated_square_same_corners(square_ring):
    rotated = rotate_curve(square_ring, 30)
    assert break_points_real(rotated, 1e-9).dp_indices == (0, 2, 4, 6)


def test_rotated_octagon_same_breaks(octagon16):
    want = initial_dominant_points(octagon16).dp_indices
    assert break_points_real(rotate_curve(octagon16, 45), 1e-9).dp_indices == want


def test_rotation_equivariance_random():
    for k, curve in enumerate(random_grid_curves(seed=41, count=8)):
        base = break_points_real(curve, 1e-9).dp_indices
        for angle in (17.0, 30.0, 45.0, 101.5):
            rotated = rotate_curve(curve, angle + k)
            assert break_points_real(rotated, 1e-9).dp_indices == base


def test_never_empty_on_closed_curves():
    for curve in random_grid_curves(seed=59, count=10):
        assert initial_dominant_points(curve).dp_indices


def test_tol_must_be_positive(square_ring):
    with pytest.raises(ValueError):
        break_points_real(square_ring, 0.0)
