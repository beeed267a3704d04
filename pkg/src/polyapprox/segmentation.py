"""Initial dominant points: step-direction break points of a closed curve.

The chain-code rule (integer curves) and its delta-vector generalization
(real/rotated curves) share one circular formulation: index i is a break
point iff the step into i differs from the step out of i.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .curve import DigitalCurve
from .errors import NotOnGrid, OpenCurveWrap, TooFewPoints

#: Break tolerance for real-valued curves.  Rotated unit king steps that
#: truly differ are >= 2*sin(22.5 deg) ~ 0.77 apart, so anything well under
#: 0.7 separates signal from float noise.
DEFAULT_BREAK_TOL = 1e-9


class SegmentationSource(Enum):
    CHAIN_CODE_BREAKS = "chain_code_breaks"
    DELTA_BREAKS = "delta_breaks"


@dataclass(frozen=True)
class InitialSegmentation:
    """Strictly increasing break-point indices plus how they were derived."""

    dp_indices: tuple[int, ...]
    source: SegmentationSource


def _require_closed(curve: DigitalCurve) -> None:
    if not curve.closed:
        raise OpenCurveWrap("initial segmentation is defined on closed curves")
    if curve.n < 3:
        raise TooFewPoints(f"need >= 3 points, got {curve.n}")


def initial_dominant_points(curve: DigitalCurve) -> InitialSegmentation:
    """Chain-code break points of a closed integer-grid curve.

    Index i is reported iff the step vector into i differs from the step
    vector out of i, indices mod n; this single circular rule covers the
    first point, the last point, and the interior alike.

    Raises
    ------
    NotOnGrid, TooFewPoints, OpenCurveWrap
    """
    _require_closed(curve)
    if not curve.on_grid:
        raise NotOnGrid("chain-code segmentation requires integer coordinates")
    pts = curve.points
    n = curve.n
    breaks = []
    for i in range(n):
        a = pts[(i - 1) % n]
        b = pts[i]
        c = pts[(i + 1) % n]
        if (b[0] - a[0], b[1] - a[1]) != (c[0] - b[0], c[1] - b[1]):
            breaks.append(i)
    return InitialSegmentation(tuple(breaks), SegmentationSource.CHAIN_CODE_BREAKS)


def break_points_real(curve: DigitalCurve,
                      tol: float = DEFAULT_BREAK_TOL) -> InitialSegmentation:
    """Delta break points of a closed curve with real coordinates.

    Index i is reported iff the in/out step vectors differ by more than
    ``tol`` in the max norm.  On an integer-grid curve with tol < 1 this
    returns exactly :func:`initial_dominant_points`; rigid motions preserve
    the reported index set.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    _require_closed(curve)
    pts = curve.points
    n = curve.n
    breaks = []
    for i in range(n):
        a = pts[(i - 1) % n]
        b = pts[i]
        c = pts[(i + 1) % n]
        din = (b[0] - a[0], b[1] - a[1])
        dout = (c[0] - b[0], c[1] - b[1])
        if max(abs(din[0] - dout[0]), abs(din[1] - dout[1])) > tol:
            breaks.append(i)
    return InitialSegmentation(tuple(breaks), SegmentationSource.DELTA_BREAKS)
