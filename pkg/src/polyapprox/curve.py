"""Value types and circular-sequence arithmetic for digital planar curves.

Coordinates are real throughout; integer-grid status is detected from the
data, never declared, so rotated (non-integer) contours flow through the
same types.  The y axis points up and Freeman codes increase
counterclockwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .errors import NonAdjacent, NotOnGrid, OpenCurveWrap, TooFewPoints

Point = tuple[float, float]

# Freeman 8-direction deltas, code 0 = +x, counterclockwise (y up).
FREEMAN_DELTAS: tuple[tuple[int, int], ...] = (
    (1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1),
)
_DELTA_TO_CODE = {d: c for c, d in enumerate(FREEMAN_DELTAS)}


@dataclass(frozen=True)
class DigitalCurve:
    """Ordered point sequence with a closed flag and circular indexing."""

    points: tuple[Point, ...]
    closed: bool

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        if self.closed:
            return self.points[i % len(self.points)]
        return self.points[i]

    @cached_property
    def on_grid(self) -> bool:
        """True when every coordinate is an integer value."""
        return all(x.is_integer() and y.is_integer() for x, y in self.points)

    def centroid(self) -> Point:
        n = len(self.points)
        return (sum(p[0] for p in self.points) / n,
                sum(p[1] for p in self.points) / n)

    def step(self, i: int) -> Point:
        """Delta vector of the directed step out of index ``i`` (circular)."""
        a = self[i]
        b = self[i + 1] if self.closed else self.points[i + 1]
        return (b[0] - a[0], b[1] - a[1])


@dataclass(frozen=True)
class ChainCode:
    """Freeman 8-direction code sequence of an integer-grid curve."""

    codes: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.codes)

    def replay(self, start: Point) -> tuple[Point, ...]:
        """Walk the codes from ``start``; returns len(codes)+1 points.

        For a code derived from a closed curve the final point equals
        ``start`` again.
        """
        pts = [start]
        x, y = start
        for c in self.codes:
            dx, dy = FREEMAN_DELTAS[c]
            x, y = x + dx, y + dy
            pts.append((x, y))
        return tuple(pts)


@dataclass(frozen=True)
class DominantPointSet:
    """Strictly increasing index subset of a curve, the current polygon."""

    curve: DigitalCurve
    indices: tuple[int, ...]

    def __post_init__(self):
        n = self.curve.n
        if len(self.indices) < 3:
            raise TooFewPoints(
                f"dominant point set needs >= 3 indices, got {len(self.indices)}")
        prev = -1
        for i in self.indices:
            if not prev < i < n:
                raise ValueError(
                    f"indices must be strictly increasing within 0..{n - 1}")
            prev = i

    @property
    def m(self) -> int:
        return len(self.indices)

    def polygon(self) -> tuple[Point, ...]:
        return tuple(self.curve.points[i] for i in self.indices)

    def neighbors(self, pos: int) -> tuple[int, int]:
        """Curve indices of the circular predecessor/successor of entry ``pos``."""
        m = len(self.indices)
        return self.indices[(pos - 1) % m], self.indices[(pos + 1) % m]


def build_curve(points, closed: bool) -> DigitalCurve:
    """Validate a raw point sequence into a :class:`DigitalCurve`.

    Consecutive duplicate points collapse into one before validation (for a
    closed curve this includes a trailing repeat of the first point).
    Integer-grid inputs must step to an 8-neighbor every time, wrap step
    included when closed.

    Raises
    ------
    TooFewPoints
        Empty input, or a closed curve with fewer than three points.
    NonAdjacent
        Integer-grid step whose Chebyshev length is not 1.
    """
    pts = [(float(x), float(y)) for x, y in points]
    if not pts:
        raise TooFewPoints("empty point list")
    dedup = [pts[0]]
    for p in pts[1:]:
        if p != dedup[-1]:
            dedup.append(p)
    if closed and len(dedup) > 1 and dedup[-1] == dedup[0]:
        dedup.pop()

    on_grid = all(x.is_integer() and y.is_integer() for x, y in dedup)
    if on_grid and len(dedup) >= 2:
        last = len(dedup) if closed else len(dedup) - 1
        for i in range(last):
            a = dedup[i]
            b = dedup[(i + 1) % len(dedup)]
            if max(abs(b[0] - a[0]), abs(b[1] - a[1])) != 1.0:
                raise NonAdjacent(
                    f"step {i} from {a} to {b} is not an 8-neighbor move")
    if closed and len(dedup) < 3:
        raise TooFewPoints(f"closed curve needs >= 3 points, got {len(dedup)}")
    return DigitalCurve(tuple(dedup), closed)


def chain_code(curve: DigitalCurve) -> ChainCode:
    """Freeman chain code of an integer-grid curve.

    ``codes[i]`` encodes the step ``points[i] -> points[i+1 mod n]``; closed
    curves include the wrap step (length n), open curves do not (length n-1).

    Raises
    ------
    NotOnGrid
        Any non-integer coordinate.
    """
    if not curve.on_grid:
        raise NotOnGrid("chain code requires integer coordinates")
    n = curve.n
    last = n if curve.closed else n - 1
    codes = []
    for i in range(last):
        a = curve.points[i]
        b = curve.points[(i + 1) % n]
        delta = (int(b[0] - a[0]), int(b[1] - a[1]))
        code = _DELTA_TO_CODE.get(delta)
        if code is None:
            raise NonAdjacent(f"step {i} delta {delta} is not a king move")
        codes.append(code)
    return ChainCode(tuple(codes))


def arc_indices(curve: DigitalCurve, i: int, j: int) -> list[int]:
    """Indices strictly between ``i`` and ``j`` in traversal order.

    Wraps past n-1 on closed curves; endpoints are excluded.

    Raises
    ------
    OpenCurveWrap
        Wrap (i > j) requested on an open curve.
    """
    n = curve.n
    if i == j:
        raise ValueError("arc endpoints must differ")
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"indices out of range 0..{n - 1}")
    if not curve.closed:
        if i > j:
            raise OpenCurveWrap("wrap requested on an open curve")
        return list(range(i + 1, j))
    out = []
    k = (i + 1) % n
    while k != j:
        out.append(k)
        k = (k + 1) % n
    return out


def arc_points(curve: DigitalCurve, i: int, j: int) -> list[Point]:
    """Points strictly between index ``i`` and ``j`` in traversal order."""
    return [curve.points[k] for k in arc_indices(curve, i, j)]


def signed_area2(points) -> float:
    """Twice the signed shoelace area (positive = counterclockwise, y up).

    Summed relative to the first vertex so the value depends only on
    coordinate differences (translation of the input cannot perturb it).
    """
    pts = list(points)
    if len(pts) < 3:
        return 0.0
    x0, y0 = pts[0]
    total = 0.0
    for a, b in zip(pts[1:-1], pts[2:]):
        total += (a[0] - x0) * (b[1] - y0) - (b[0] - x0) * (a[1] - y0)
    return total


def dist(a: Point, b: Point) -> float:
    dx = b[0] - a[0]
    dy = b[1] - a[1]
    return math.sqrt(dx * dx + dy * dy)
