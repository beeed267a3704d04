"""Shared fixtures and independent oracles for the test suite."""

import math
import random
from importlib import resources

import numpy as np
import pytest

from polyapprox import (BinaryImage, DominantPointSet, build_curve,
                        initial_indices, load_curve_file, significance,
                        trace_contour)


def load_fixture(name):
    """Packaged benchmark curve by name (chromosome, leaf, ...)."""
    data = resources.files("polyapprox").joinpath(f"fixtures/{name}.txt")
    return load_curve_file(data.read_bytes())

# --------------------------------------------------------------------------
# independent oracles


def seg_dist(a, b, p):
    """Clamped-projection point-to-segment distance, coded independently
    of the production three-case dispatch."""
    ax, ay = a
    bx, by = b
    px, py = p
    vx, vy = bx - ax, by - ay
    len2 = vx * vx + vy * vy
    if len2 == 0.0:
        return math.hypot(px - ax, py - ay)
    t = ((px - ax) * vx + (py - ay) * vy) / len2
    t = min(1.0, max(0.0, t))
    qx, qy = ax + t * vx, ay + t * vy
    return math.hypot(px - qx, py - qy)


def brute_eliminate(curve, m):
    """From-scratch replay of the elimination loop.

    Recomputes every dominant point's significance after each removal
    instead of only the two neighbors; returns (trace, final_indices) with
    trace entries (removed_index, sig_at_removal).
    """
    idx = list(initial_indices(curve))
    trace = []
    while len(idx) > m:
        dps = DominantPointSet(curve, tuple(idx))
        sigs = [significance(curve, dps, pos) for pos in range(len(idx))]
        best = 0
        for pos in range(1, len(idx)):
            if sigs[pos] < sigs[best]:
                best = pos
        trace.append((idx[best], sigs[best]))
        del idx[best]
    return trace, tuple(idx)


# --------------------------------------------------------------------------
# deterministic curve fixtures


@pytest.fixture
def square_ring():
    """Side-2 axis-aligned square boundary, 8 grid points, closed."""
    return build_curve([(0, 0), (1, 0), (2, 0), (2, 1), (2, 2), (1, 2),
                        (0, 2), (0, 1)], closed=True)


@pytest.fixture
def octagon16():
    """Digitized octagon, two unit steps per edge (16 points)."""
    return build_curve([(0, 0), (1, 0), (2, 0), (3, 1), (4, 2), (4, 3),
                        (4, 4), (3, 5), (2, 6), (1, 6), (0, 6), (-1, 5),
                        (-2, 4), (-2, 3), (-2, 2), (-1, 1)], closed=True)


@pytest.fixture
def quarter_circle():
    """Radius-5 quarter circle grid arc, 6 interior points, open."""
    return build_curve([(5, 0), (5, 1), (4, 2), (4, 3), (3, 4), (2, 4),
                        (1, 5), (0, 5)], closed=False)


def random_grid_curve(rng: random.Random, size: int = 9):
    """Closed grid curve traced from a random small blob, or None.

    Draws 2-3 random filled rectangles plus a disk on a size x size grid and
    traces the boundary of the largest component.
    """
    grid = np.zeros((size, size), dtype=bool)
    for _ in range(rng.randint(2, 3)):
        r0 = rng.randint(0, size - 3)
        c0 = rng.randint(0, size - 3)
        h = rng.randint(2, min(4, size - r0))
        w = rng.randint(2, min(4, size - c0))
        grid[r0:r0 + h, c0:c0 + w] = True
    cr, cc = rng.randint(2, size - 3), rng.randint(2, size - 3)
    rad = rng.randint(1, 2)
    for r in range(size):
        for c in range(size):
            if (r - cr) ** 2 + (c - cc) ** 2 <= rad * rad:
                grid[r, c] = True
    try:
        return trace_contour(BinaryImage(size, size, grid))
    except Exception:
        return None


def random_grid_curves(seed: int, count: int, max_n: int = 40):
    """Deterministic batch of small closed grid curves."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        curve = random_grid_curve(rng)
        if curve is None or not (8 <= curve.n <= max_n):
            continue
        if len(initial_indices(curve)) < 5:
            continue
        if len(set(curve.points)) != curve.n:
            continue   # pinched boundary: a coordinate visited twice
        out.append(curve)
    return out
