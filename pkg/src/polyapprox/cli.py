"""Command line front end: approximate curves, reproduce benchmark tables.

Exit codes: 0 success, 1 usage error, 2 data error, 3 internal invariant
violation.  All real numbers serialize with 6 significant digits
(round-half-even); output files are written atomically so a failing run
never leaves a partial file behind.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
from importlib import resources

from .curve import DigitalCurve, DominantPointSet
from .eliminate import Approximation, eliminate_to_count, eliminate_to_error
from .errors import PolyapproxError
from .ingest import load_curve_file, load_image, trace_contour
from .metrics import metrics_report, rotation_report
from .rdp import rdp_to_count

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INTERNAL = 3

#: Rotation angles of the robustness table.
DEFAULT_ANGLES = (0.0, 20.0, 30.0, 45.0, 70.0, 80.0, 180.0)

#: (contour, vertex counts) rows of the two benchmark tables.
SYNTHETIC_ROWS = (("chromosome", (15, 6)), ("leaf", (21, 16)),
                  ("semicircle", (18, 17, 14, 12)), ("infinity", (10, 5)))
MPEG_ROWS = (("bell7", (22, 20, 7)),)

_IMAGE_MAGICS = (b"P1", b"P2", b"P4", b"P5")


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt6(value: float) -> str:
    """Fixed 6-significant-digit decimal form ('' for the +inf sentinel)."""
    if value is None or math.isinf(value):
        return ""
    return f"{value:.6g}"


def _round6(value: float):
    if value is None or math.isinf(value):
        return None
    return float(f"{value:.6g}")


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".approx-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _read_input(path: str) -> DigitalCurve:
    try:
        with open(path, "rb") as handle:
            data = handle.read()
    except OSError as exc:
        raise PolyapproxError(f"cannot read {path}: {exc.strerror}") from None
    if data[:2] in _IMAGE_MAGICS:
        return trace_contour(load_image(data))
    return load_curve_file(data)


# --------------------------------------------------------------------------
# approximate


def _metrics_dict(rep) -> dict:
    return {
        "cr": _round6(rep.cr), "ise": _round6(rep.ise), "fom": _round6(rep.fom),
        "we": _round6(rep.we), "we2": _round6(rep.we2),
        "max_dev": _round6(rep.max_dev), "area": _round6(rep.area),
        "perimeter": _round6(rep.perimeter),
        "compactness": _round6(rep.compactness),
    }


def _json_output(curve, dps, rep, mode, method, approx, want_trace) -> str:
    payload = {
        "n": curve.n,
        "m": dps.m,
        "mode": mode,
        "method": method,
        "indices": list(dps.indices),
        "points": [[_round6(x), _round6(y)] for x, y in dps.polygon()],
        "metrics": _metrics_dict(rep),
    }
    if want_trace:
        steps = approx.trace if approx is not None else ()
        payload["trace"] = [{"removed_index": s.removed_index,
                             "sig": _round6(s.sig_at_removal),
                             "ise": _round6(s.metrics_after.ise)}
                            for s in steps]
    return json.dumps(payload, indent=2) + "\n"


_METRIC_COLUMNS = ("n", "m", "cr", "ise", "fom", "we", "we2",
                   "max_dev", "area", "perimeter", "compactness")


def _csv_metrics_row(rep) -> str:
    vals = [str(rep.n), str(rep.m)]
    vals += [fmt6(getattr(rep, f)) for f in _METRIC_COLUMNS[2:]]
    return ",".join(vals)


def _csv_output(rep, approx, want_trace) -> str:
    lines = [",".join(_METRIC_COLUMNS), _csv_metrics_row(rep)]
    if want_trace:
        lines.append("")
        lines.append("step,removed_index,sig,ise")
        steps = approx.trace if approx is not None else ()
        for i, s in enumerate(steps):
            lines.append(f"{i},{s.removed_index},{fmt6(s.sig_at_removal)},"
                         f"{fmt6(s.metrics_after.ise)}")
    return "\n".join(lines) + "\n"


def render_svg(curve: DigitalCurve, dps: DominantPointSet) -> str:
    """SVG overlay: curve polyline, approximating polygon, vertex markers."""
    xs = [p[0] for p in curve.points]
    ys = [p[1] for p in curve.points]
    pad = 2.0
    width = max(xs) - min(xs) + 2 * pad
    height = max(ys) - min(ys) + 2 * pad
    x0 = min(xs) - pad
    y1 = max(ys) + pad

    def sx(x):
        return fmt6(x - x0)

    def sy(y):
        # SVG y grows downward; flip back from the library's y-up frame
        return fmt6(y1 - y)

    curve_pts = list(curve.points) + ([curve.points[0]] if curve.closed else [])
    poly = dps.polygon()
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {fmt6(width)} '
        f'{fmt6(height)}">',
        '<g id="curve">',
        '<polyline fill="none" stroke="#999999" stroke-width="0.2" points="'
        + " ".join(f"{sx(x)},{sy(y)}" for x, y in curve_pts) + '"/>',
        '</g>',
        '<g id="polygon">',
        '<polygon fill="none" stroke="#cc2222" stroke-width="0.3" points="'
        + " ".join(f"{sx(x)},{sy(y)}" for x, y in poly) + '"/>',
        '</g>',
        '<g id="markers">',
    ]
    for x, y in poly:
        lines.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="0.6" fill="#2244cc"/>')
    lines.append('</g>')
    lines.append('</svg>')
    return "\n".join(lines) + "\n"


def cmd_approximate(args) -> int:
    curve = _read_input(args.input)
    approx: Approximation | None = None
    if args.baseline == "rdp":
        if args.points is None:
            raise _UsageError("--baseline rdp requires --points")
        dps = rdp_to_count(curve, args.points)
        mode, method = "count", "rdp"
    elif args.points is not None:
        approx = eliminate_to_count(curve, args.points)
        dps = approx.dominant_points
        mode, method = "count", "proposed"
    else:
        approx = eliminate_to_error(curve, args.max_ise)
        dps = approx.dominant_points
        mode, method = "max_ise", "proposed"
    rep = metrics_report(curve, dps)
    if args.format == "json":
        text = _json_output(curve, dps, rep, mode, method, approx, args.trace)
    elif args.format == "csv":
        text = _csv_output(rep, approx, args.trace)
    else:
        text = render_svg(curve, dps)
    _emit(text, args.output)
    return EXIT_OK


# --------------------------------------------------------------------------
# bench


def _fixture_dir_default() -> str:
    return str(resources.files("polyapprox").joinpath("fixtures"))


def cmd_bench(args) -> int:
    table_rows = SYNTHETIC_ROWS if args.table == "synthetic" else MPEG_ROWS
    count_col = "m" if args.table == "synthetic" else "k"
    quality = ("we", "fom") if args.table == "synthetic" else ("we", "we2")
    header = ["contour", "method", count_col, "cr", "ise", *quality]
    lines = [",".join(header)]
    partial = False
    for contour, counts in table_rows:
        path = os.path.join(args.fixture_dir, f"{contour}.txt")
        if not os.path.exists(path):
            print(f"warning: missing fixture {path}, skipping", file=sys.stderr)
            partial = True
            continue
        try:
            curve = _read_input(path)
        except PolyapproxError as exc:
            print(f"warning: unreadable fixture {path}: {exc}", file=sys.stderr)
            partial = True
            continue
        for m in counts:
            for method in ("proposed", "rdp"):
                try:
                    if method == "proposed":
                        dps = eliminate_to_count(curve, m).dominant_points
                    else:
                        dps = rdp_to_count(curve, m)
                except PolyapproxError as exc:
                    print(f"warning: {contour} {method} m={m} skipped: {exc}",
                          file=sys.stderr)
                    partial = True
                    continue
                rep = metrics_report(curve, dps)
                row = [contour, method, str(m), fmt6(rep.cr), fmt6(rep.ise)]
                row += [fmt6(getattr(rep, q)) for q in quality]
                lines.append(",".join(row))
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_DATA if partial else EXIT_OK


# --------------------------------------------------------------------------
# rotate-test


def cmd_rotate_test(args) -> int:
    curve = _read_input(args.input)
    rows = rotation_report(curve, args.angles, args.points)
    lines = ["angle,max_dev,ise,area,perimeter,compactness"]
    for r in rows:
        lines.append(",".join([fmt6(r.angle), fmt6(r.max_dev), fmt6(r.ise),
                               fmt6(r.area), fmt6(r.perimeter),
                               fmt6(r.compactness)]))
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


# --------------------------------------------------------------------------
# argument wiring


class _UsageError(Exception):
    pass


def _angles_list(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad angle list {text!r}") from None


def _approximate_parser() -> _Parser:
    p = _Parser(prog="approx", description="Polygonally approximate a digital curve.")
    p.add_argument("--input", required=True, help="curve text file or PBM/PGM image")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--points", type=int, metavar="M",
                       help="stop at exactly M dominant points")
    group.add_argument("--max-ise", type=float, metavar="E", dest="max_ise",
                       help="remove points while ISE stays within E")
    p.add_argument("--format", choices=("json", "csv", "svg"), default="json")
    p.add_argument("--baseline", choices=("rdp",), default=None,
                   help="run the RDP baseline instead of the proposed method")
    p.add_argument("--trace", action="store_true",
                   help="include the per-removal trace in json/csv output")
    p.add_argument("--output", default=None, help="write here instead of stdout")
    return p


def _bench_parser() -> _Parser:
    p = _Parser(prog="approx bench", description="Reproduce a benchmark table.")
    p.add_argument("fixture_dir", nargs="?", default=None,
                   help="directory of fixture curves (default: packaged set)")
    p.add_argument("--table", choices=("synthetic", "mpeg"), default="synthetic")
    p.add_argument("--output", default=None)
    return p


def _rotate_parser() -> _Parser:
    p = _Parser(prog="approx rotate-test",
                description="Rotation robustness table for one curve.")
    p.add_argument("--input", required=True)
    p.add_argument("--points", type=int, required=True, metavar="M")
    p.add_argument("--angles", type=_angles_list, default=list(DEFAULT_ANGLES))
    p.add_argument("--output", default=None)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        if argv and argv[0] == "bench":
            args = _bench_parser().parse_args(argv[1:])
            if args.fixture_dir is None:
                args.fixture_dir = _fixture_dir_default()
            return cmd_bench(args)
        if argv and argv[0] == "rotate-test":
            args = _rotate_parser().parse_args(argv[1:])
            return cmd_rotate_test(args)
        if argv and argv[0] == "approximate":
            argv = argv[1:]
        args = _approximate_parser().parse_args(argv)
        return cmd_approximate(args)
    except SystemExit as exc:  # argparse usage failures and --help
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    except _UsageError as exc:
        print(f"approx: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PolyapproxError as exc:
        print(f"approx: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except Exception as exc:  # internal invariant violation
        print(f"approx: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
