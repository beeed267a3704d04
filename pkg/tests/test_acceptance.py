"""Acceptance gate: every shipped criterion at its stated tolerance.

Each test prints one PASS/FAIL line so the gate can be read off a plain
pytest -s run.  Reference error values and tolerances live next to the
criterion that uses them; fixture-dependent checks fall back to the
documented RDP-relative bound only where the primary window is not met,
and that fallback must be recorded in BENCHMARKS.md.
"""

import math
import os
import time
from importlib import resources

import pytest

from polyapprox import (break_points_real, build_curve, chord_frame,
                        classify_projection, eliminate_to_count,
                        initial_dominant_points, initial_indices,
                        metrics_report, point_contribution, rdp_to_count,
                        rotate_curve, rotation_report, significance_table,
                        DominantPointSet)
from polyapprox.cli import main as cli_main

from conftest import brute_eliminate, load_fixture, random_grid_curves, seg_dist
from test_significance import random_triples


def check(num, ok, detail):
    status = "PASS" if ok else "FAIL"
    print(f"criterion {num}: {status} — {detail}")
    assert ok, f"criterion {num}: {detail}"


# --------------------------------------------------------------------------


def test_criterion_1_chromosome_15():
    curve = load_fixture("chromosome")
    t0 = time.perf_counter()
    approx = eliminate_to_count(curve, 15)
    elapsed = time.perf_counter() - t0
    rep = metrics_report(curve, approx.dominant_points)
    ok = (rep.cr == 4.00
          and 4.87 * 0.85 <= rep.ise <= 4.87 * 1.15
          and abs(rep.we - rep.ise / rep.cr) <= 1e-12 * abs(rep.we)
          and abs(rep.fom - rep.cr / rep.ise) <= 1e-12 * abs(rep.fom)
          and elapsed < 1.0)
    check(1, ok, f"chromosome m=15: CR={rep.cr} ISE={rep.ise:.3f} "
                 f"(ref 4.87 +/-15%) WE={rep.we:.3f} FOM={rep.fom:.3f} "
                 f"in {elapsed * 1000:.0f} ms")


def _ise_with_fallback(name, m, ref, tol):
    """(ok, detail) under the primary window or the documented RDP bound."""
    curve = load_fixture(name)
    rep = metrics_report(curve, eliminate_to_count(curve, m).dominant_points)
    lo, hi = ref * (1 - tol), ref * (1 + tol)
    if lo <= rep.ise <= hi:
        return True, f"{name} m={m}: ISE={rep.ise:.2f} in [{lo:.2f}, {hi:.2f}]"
    rdp_rep = metrics_report(curve, rdp_to_count(curve, m))
    ratio = rep.ise / rdp_rep.ise
    documented = f"{name} m={m}" in _benchmarks_text()
    ok = ratio <= 1.10 and documented
    return ok, (f"{name} m={m}: ISE={rep.ise:.2f} outside [{lo:.2f}, {hi:.2f}], "
                f"fallback ratio vs RDP={ratio:.2f} (<=1.10), "
                f"documented={documented}")


def _benchmarks_text():
    path = os.path.join(os.path.dirname(__file__), "..", "BENCHMARKS.md")
    if not os.path.exists(path):
        return ""
    with open(path) as fh:
        return fh.read()


def test_criterion_2_synthetic_table():
    results = [
        _ise_with_fallback("chromosome", 6, 45.49, 0.20),
        _ise_with_fallback("leaf", 21, 13.25, 0.15),
        _ise_with_fallback("semicircle", 14, 17.73, 0.15),
        _ise_with_fallback("infinity", 10, 4.44, 0.15),
    ]
    ok = all(r[0] for r in results)
    check(2, ok, "; ".join(r[1] for r in results))


def test_criterion_3_quarter_turn_identity():
    failures = []
    cases = [("chromosome", 15), ("leaf", 21), ("semicircle", 14),
             ("infinity", 10), ("bell7", 20)]
    for name, m in cases:
        base = rotation_report(load_fixture(name), [0.0], m)[0]
        for angle in (90.0, 180.0, 270.0, 360.0):
            row = rotation_report(load_fixture(name), [angle], m)[0]
            same = (row.max_dev == base.max_dev and row.ise == base.ise
                    and row.area == base.area
                    and row.perimeter == base.perimeter
                    and row.compactness == base.compactness)
            if not same:
                failures.append(f"{name}@{angle}")
    check(3, not failures,
          f"bit-identical metrics at 90/180/270/360 on {len(cases)} fixtures"
          + (f"; failed: {failures}" if failures else ""))


def test_criterion_4_rotation_robustness():
    curve = load_fixture("bell7")
    rows = rotation_report(curve, [0.0, 20.0, 30.0, 45.0, 70.0, 80.0], 20)
    base = rows[0].compactness
    worst = max(abs(r.compactness - base) / base for r in rows[1:])
    check(4, worst <= 0.35,
          f"bell7 m=20 compactness drift {worst:.1%} across "
          f"20/30/45/70/80 deg (budget 35%)")


def test_criterion_5_significance_oracle():
    triples = random_triples(seed=424242, count=1300)
    regions = set()
    worst = 0.0
    for a, b, p in triples:
        length = math.dist(a, b)
        x_t = chord_frame(a, b).transform(p)[0]
        regions.add(classify_projection(x_t, length).value)
        worst = max(worst, abs(point_contribution(a, b, p) - seg_dist(a, b, p)))
    continuous = True
    a, b = (0.0, 0.0), (4.0, 0.0)
    for h in (0.25, 1.0, 2.5):
        continuous &= point_contribution(a, b, (0.0, h)) == h   # start boundary
        continuous &= point_contribution(a, b, (4.0, h)) == h   # end boundary
    ok = (len(triples) >= 1000 and regions == {"before", "within", "beyond"}
          and worst <= 1e-9 and continuous)
    check(5, ok, f"{len(triples)} triples, all regions hit, max |diff| "
                 f"{worst:.2e} (<=1e-9), boundary dispatch exact")


def test_criterion_6_elimination_oracle(octagon16):
    curves = [octagon16] + random_grid_curves(seed=4242, count=20)
    mismatches = 0
    for k, curve in enumerate(curves):
        m = 4 if curve is octagon16 else max(3, len(initial_indices(curve)) // 3)
        approx = eliminate_to_count(curve, m)
        want_trace, want_final = brute_eliminate(curve, m)
        got_trace = [(s.removed_index, s.sig_at_removal) for s in approx.trace]
        if got_trace != want_trace or approx.dominant_points.indices != want_final \
                or approx.dominant_points.m != m:
            mismatches += 1
    check(6, mismatches == 0,
          f"exact trace replay on octagon + {len(curves) - 1} random grid "
          f"curves (n<=40), {mismatches} mismatches")


def test_criterion_7_cidp_properties():
    flat = build_curve([(x, 0) for x in range(8)] + [(7, 1)] +
                       [(x, 2) for x in range(7, -1, -1)] + [(0, 1)],
                       closed=True)
    seg = initial_dominant_points(flat)
    # straight digital runs are indices 1..6 (bottom) and 10..15 (top)
    straight_ok = all(not (0 < i < 7) and not (9 < i < 16)
                      for i in seg.dp_indices)

    names = ("chromosome", "leaf", "semicircle", "infinity", "bell7")
    equal_ok = True
    rotation_ok = True
    for name in names:
        curve = load_fixture(name)
        chain = initial_dominant_points(curve).dp_indices
        equal_ok &= break_points_real(curve, 1e-9).dp_indices == chain
        for angle in (17.0, 45.0, 90.0):
            rotated = rotate_curve(curve, angle)
            rotation_ok &= break_points_real(rotated, 1e-9).dp_indices == chain
    ok = straight_ok and equal_ok and rotation_ok
    check(7, ok, f"no interior breaks on straight runs ({straight_ok}), "
                 f"delta==chain-code on all fixtures ({equal_ok}), "
                 f"rotated break sets equal at tol 1e-9 ({rotation_ok})")


def test_criterion_8_metric_identities():
    bad = []
    for name, m in (("chromosome", 15), ("chromosome", 6), ("leaf", 21),
                    ("semicircle", 14), ("infinity", 10), ("bell7", 20)):
        curve = load_fixture(name)
        for rep in [s.metrics_after
                    for s in eliminate_to_count(curve, m).trace[-3:]]:
            if rep.cr != rep.n / rep.m:
                bad.append(f"{name}: cr")
            if rep.ise > 0 and abs(rep.fom * rep.we - 1.0) > 1e-12:
                bad.append(f"{name}: fom*we")
            if abs(rep.we2 * rep.cr - rep.we) > 1e-12 * max(abs(rep.we), 1.0):
                bad.append(f"{name}: we2*cr")
    curve = load_fixture("chromosome")
    full = metrics_report(curve, DominantPointSet(curve, tuple(range(curve.n))))
    if full.ise != 0.0:
        bad.append("full-polygon ISE")
    check(8, not bad, "fom*we=1, we2*cr=we, cr=n/m within 1e-12; "
                      "ISE=0 with every point dominant"
                      + (f"; failed: {bad}" if bad else ""))


def test_criterion_9_determinism_and_speed(tmp_path):
    fixture_dir = str(resources.files("polyapprox").joinpath("fixtures"))
    out1 = tmp_path / "bench1.csv"
    out2 = tmp_path / "bench2.csv"
    t0 = time.perf_counter()
    code1 = cli_main(["bench", fixture_dir, "--table", "synthetic",
                      "--output", str(out1)])
    elapsed = time.perf_counter() - t0
    code2 = cli_main(["bench", fixture_dir, "--table", "synthetic",
                      "--output", str(out2)])
    identical = out1.read_bytes() == out2.read_bytes()
    ok = code1 == 0 and code2 == 0 and identical and elapsed < 10.0
    check(9, ok, f"bench CSV byte-identical twice ({identical}), synthetic "
                 f"suite in {elapsed:.2f}s (<10s), exit codes {code1}/{code2}")
