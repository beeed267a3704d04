"""Projection-position-aware significance of a dominant point.

A candidate's significance accumulates, over every original curve point on
the arc its removal would span, a distance that depends on where the point
projects relative to the chord between the two neighboring dominant points:
before the chord start (distance to the start), within the chord (unsigned
chord-frame ordinate), or beyond the chord end (distance to the end).
Together the three cases equal the clamped point-to-segment distance, so a
sharp turn whose apex projects outside the chord still scores its full
offset instead of a foreshortened perpendicular.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .curve import DigitalCurve, DominantPointSet, Point, arc_points
from .errors import DegenerateChord


class ProjectionRegion(Enum):
    BEFORE = "before"
    WITHIN = "within"
    BEYOND = "beyond"


@dataclass(frozen=True)
class ChordFrame:
    """Coordinate frame with the chord start at the origin, chord on +x."""

    origin: Point
    angle: float
    chord_length: float

    def transform(self, p: Point) -> Point:
        """Map ``p`` into the chord frame (translate then rotate by -angle)."""
        dx = p[0] - self.origin[0]
        dy = p[1] - self.origin[1]
        c = math.cos(self.angle)
        s = math.sin(self.angle)
        return (dx * c + dy * s, -dx * s + dy * c)


def chord_frame(s_prev: Point, s_next: Point) -> ChordFrame:
    """Frame translating ``s_prev`` to the origin and aligning the chord with +x.

    Raises
    ------
    DegenerateChord
        Coincident endpoints.
    """
    dx = s_next[0] - s_prev[0]
    dy = s_next[1] - s_prev[1]
    if dx == 0.0 and dy == 0.0:
        raise DegenerateChord(f"chord endpoints coincide at {s_prev}")
    return ChordFrame(origin=s_prev,
                      angle=math.atan2(dy, dx),
                      chord_length=math.sqrt(dx * dx + dy * dy))


def classify_projection(x_t: float, chord_length: float) -> ProjectionRegion:
    """Region of a transformed abscissa relative to the chord [0, chord_length].

    Both boundaries belong to WITHIN; all three distance formulas agree there,
    so the convention is observationally neutral but keeps tests deterministic.
    """
    if not chord_length > 0.0:
        raise DegenerateChord("chord length must be positive")
    if x_t < 0.0:
        return ProjectionRegion.BEFORE
    if x_t > chord_length:
        return ProjectionRegion.BEYOND
    return ProjectionRegion.WITHIN


def point_contribution(s_prev: Point, s_next: Point, p: Point) -> float:
    """Distance contribution of curve point ``p`` against chord (s_prev, s_next).

    BEFORE -> |p - s_prev|; WITHIN -> |y'| in the chord frame, evaluated as
    |cross(s_next - s_prev, p - s_prev)| / chord_length; BEYOND -> |p - s_next|.
    The result equals the exact clamped point-to-segment distance.

    Raises
    ------
    DegenerateChord
        Coincident chord endpoints.
    """
    ax, ay = s_prev
    bx, by = s_next
    dx = bx - ax
    dy = by - ay
    len2 = dx * dx + dy * dy
    if len2 == 0.0:
        raise DegenerateChord(f"chord endpoints coincide at {s_prev}")
    ex = p[0] - ax
    ey = p[1] - ay
    proj = ex * dx + ey * dy          # x' scaled by chord length
    if proj < 0.0:
        return math.sqrt(ex * ex + ey * ey)
    if proj > len2:
        fx = p[0] - bx
        fy = p[1] - by
        return math.sqrt(fx * fx + fy * fy)
    return abs(dx * ey - dy * ex) / math.sqrt(len2)


def significance(curve: DigitalCurve, dps: DominantPointSet, k: int) -> float:
    """Accumulated contribution of dominant point ``k`` (position within ``dps``).

    Sums :func:`point_contribution` over every original curve point strictly
    between the circular neighbors of entry ``k``, in traversal order.  The
    neighbors themselves contribute exactly 0 and are excluded.
    """
    i_prev, i_next = dps.neighbors(k)
    s_prev = curve.points[i_prev]
    s_next = curve.points[i_next]
    total = 0.0
    for p in arc_points(curve, i_prev, i_next):
        total += point_contribution(s_prev, s_next, p)
    return total


def significance_table(curve: DigitalCurve, dps: DominantPointSet) -> dict[int, float]:
    """Significance of every current dominant point, keyed by curve index."""
    return {idx: significance(curve, dps, pos)
            for pos, idx in enumerate(dps.indices)}
