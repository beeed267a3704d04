"""Ramer-Douglas-Peucker baseline simplifier for the comparison tables.

The closed curve is seeded at the point farthest from the centroid and the
point farthest from that one, split into the two chains between them, and
each chain is recursively split at its maximum clamped point-to-segment
deviation while that deviation exceeds epsilon.
"""

from __future__ import annotations

from .curve import DigitalCurve, DominantPointSet, arc_indices
from .errors import OpenCurveWrap, TargetTooLarge, TargetTooSmall
from .metrics import per_point_deviations
from .significance import point_contribution


def _seed_pair(curve: DigitalCurve) -> tuple[int, int]:
    pts = curve.points
    cx, cy = curve.centroid()
    best, best_d = 0, -1.0
    for i, (x, y) in enumerate(pts):
        d = (x - cx) ** 2 + (y - cy) ** 2
        if d > best_d:
            best, best_d = i, d
    ax, ay = pts[best]
    far, far_d = best, -1.0
    for i, (x, y) in enumerate(pts):
        d = (x - ax) ** 2 + (y - ay) ** 2
        if d > far_d:
            far, far_d = i, d
    return best, far


def rdp(curve: DigitalCurve, epsilon: float) -> DominantPointSet:
    """Retained indices of the closed curve under deviation budget ``epsilon``.

    Every discarded point lies within ``epsilon`` (clamped point-to-segment
    distance) of its chain's approximating segment.  With epsilon = 0 every
    non-collinear point survives.  The result is padded to three points when
    a large epsilon would leave only the two seeds.
    """
    if epsilon < 0:
        raise ValueError("epsilon must be >= 0")
    if not curve.closed:
        raise OpenCurveWrap("the RDP baseline splits closed curves only")
    pts = curve.points
    i0, i1 = _seed_pair(curve)
    kept = {i0, i1}
    stack = [(i0, i1), (i1, i0)]
    while stack:
        s, e = stack.pop()
        interior = arc_indices(curve, s, e)
        if not interior:
            continue
        a = pts[s]
        b = pts[e]
        kmax, dmax = interior[0], -1.0
        for k in interior:
            d = point_contribution(a, b, pts[k])
            if d > dmax:
                kmax, dmax = k, d
        if dmax > epsilon:
            kept.add(kmax)
            stack.append((s, kmax))
            stack.append((kmax, e))
    if len(kept) < 3:
        # epsilon swallowed everything: keep the worst offender as a third vertex
        a, b = pts[i0], pts[i1]
        extra, extra_d = -1, -1.0
        for k in range(curve.n):
            if k in kept:
                continue
            d = point_contribution(a, b, pts[k])
            if d > extra_d:
                extra, extra_d = k, d
        kept.add(extra)
    return DominantPointSet(curve, tuple(sorted(kept)))


def rdp_to_count(curve: DigitalCurve, m: int) -> DominantPointSet:
    """RDP output with exactly ``m`` retained points.

    Bisects epsilon until the retained count reaches ``m``; when identical
    deviations make the count jump past ``m``, the remaining vertices are
    added by splitting the current worst arc until the count is exact.

    Raises
    ------
    TargetTooSmall, TargetTooLarge
    """
    if m < 3:
        raise TargetTooSmall("target below minimum polygon size 3")
    full = rdp(curve, 0.0)
    if m > full.m:
        raise TargetTooLarge(
            f"target {m} exceeds the {full.m} points RDP retains at epsilon 0")
    if m == full.m:
        return full

    xs = [p[0] for p in curve.points]
    ys = [p[1] for p in curve.points]
    hi = max(xs) - min(xs) + max(ys) - min(ys) + 1.0   # above any deviation
    lo = 0.0
    for _ in range(100):
        mid = (lo + hi) / 2.0
        if rdp(curve, mid).m > m:
            lo = mid
        else:
            hi = mid
    best = rdp(curve, hi)
    if best.m == m:
        return best

    # the count jumped below m: add back worst-deviation points one at a time
    idx = list(best.indices)
    while len(idx) < m:
        dev = per_point_deviations(curve, DominantPointSet(curve, tuple(idx)))
        worst, worst_d = -1, -1.0
        for k, d in enumerate(dev):
            if d > worst_d:
                worst, worst_d = k, d
        idx = sorted(idx + [worst])
    return DominantPointSet(curve, tuple(idx))
