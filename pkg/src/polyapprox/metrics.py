"""Quality metrics for one polygonal approximation, plus rotation robustness.

CR = n/m, ISE = sum of squared per-point deviations, FOM = CR/ISE,
WE = ISE/CR, WE2 = ISE/CR^2; the rotation table adds polygon area,
perimeter and compactness = area/perimeter^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curve import DigitalCurve, DominantPointSet, arc_indices, dist, signed_area2
from .significance import point_contribution


@dataclass(frozen=True)
class MetricsReport:
    """All quality figures for one (curve, dominant point set) pair.

    ``fom`` is +inf when ise == 0 (serialized as null by the CLI).
    """

    n: int
    m: int
    cr: float
    ise: float
    fom: float
    we: float
    we2: float
    max_dev: float
    area: float
    perimeter: float
    compactness: float


def per_point_deviations(curve: DigitalCurve, dps: DominantPointSet) -> list[float]:
    """Deviation of every original curve point from its spanning polygon edge.

    Point k gets the clamped point-to-segment distance to the edge between
    the two dominant points enclosing k; dominant points themselves get 0.
    """
    dev = [0.0] * curve.n
    idx = dps.indices
    m = dps.m
    for pos in range(m):
        i = idx[pos]
        j = idx[(pos + 1) % m]
        pa = curve.points[i]
        pb = curve.points[j]
        for k in arc_indices(curve, i, j):
            dev[k] = point_contribution(pa, pb, curve.points[k])
    return dev


def metrics_report(curve: DigitalCurve, dps: DominantPointSet) -> MetricsReport:
    """Evaluate every metric for the polygon picked out by ``dps``."""
    dev = per_point_deviations(curve, dps)
    ise = 0.0
    for d in dev:
        ise += d * d
    n = curve.n
    m = dps.m
    cr = n / m
    fom = math.inf if ise == 0.0 else cr / ise
    we = ise / cr
    we2 = we / cr
    poly = dps.polygon()
    area = abs(signed_area2(poly)) / 2.0
    perimeter = 0.0
    for pos in range(m):
        perimeter += dist(poly[pos], poly[(pos + 1) % m])
    compactness = area / (perimeter * perimeter) if perimeter > 0.0 else 0.0
    return MetricsReport(n=n, m=m, cr=cr, ise=ise, fom=fom, we=we, we2=we2,
                         max_dev=max(dev), area=area, perimeter=perimeter,
                         compactness=compactness)


@dataclass(frozen=True)
class RotationRow:
    """One rotation-robustness table row."""

    angle: float
    max_dev: float
    ise: float
    area: float
    perimeter: float
    compactness: float


def rotation_report(curve: DigitalCurve, angles, m: int) -> list[RotationRow]:
    """Run the full pipeline on centroid rotations of ``curve`` at each angle.

    Each row rotates the curve, segments it (delta mode for the now real
    coordinates), eliminates down to ``m`` dominant points and reports the
    resulting metrics.
    """
    # local imports: rotation drives the whole pipeline, which itself
    # reports metrics per elimination step
    from .eliminate import eliminate_to_count
    from .ingest import rotate_curve

    rows = []
    for angle in angles:
        rotated = rotate_curve(curve, angle)
        approx = eliminate_to_count(rotated, m)
        rep = metrics_report(rotated, approx.dominant_points)
        rows.append(RotationRow(angle=float(angle), max_dev=rep.max_dev,
                                ise=rep.ise, area=rep.area,
                                perimeter=rep.perimeter,
                                compactness=rep.compactness))
    return rows
