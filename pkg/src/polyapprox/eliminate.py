"""Iterative elimination of the least significant dominant point.

Each pass removes the dominant point with the minimal significance (ties go
to the smallest curve index, i.e. first in traversal order), then recomputes
the significance of only the two surviving neighbors, whose supporting arcs
just grew.  Metrics after every removal are recorded in the trace; rendering
them is the CLI's job, which keeps the engine pure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import DigitalCurve, DominantPointSet
from .errors import TargetTooLarge, TargetTooSmall
from .metrics import MetricsReport, metrics_report
from .segmentation import break_points_real, initial_dominant_points
from .significance import significance, significance_table

#: Smallest polygon the eliminator will produce.
MIN_POLYGON_SIZE = 3


@dataclass(frozen=True)
class EliminationStep:
    """One removal: which curve index went, at what significance, leaving what."""

    removed_index: int
    sig_at_removal: float
    metrics_after: MetricsReport


@dataclass(frozen=True)
class Approximation:
    """Result of an elimination run, final polygon plus the full trace."""

    curve: DigitalCurve
    initial_indices: tuple[int, ...]
    dominant_points: DominantPointSet
    trace: tuple[EliminationStep, ...]


def initial_indices(curve: DigitalCurve) -> tuple[int, ...]:
    """Initial dominant points: chain-code breaks on grid curves, delta breaks otherwise."""
    if curve.on_grid:
        return initial_dominant_points(curve).dp_indices
    return break_points_real(curve).dp_indices


def _argmin_position(dp: list[int], sig: dict[int, float]) -> int:
    # strict < keeps the first minimum: ties break to the smallest curve index
    best = 0
    for pos in range(1, len(dp)):
        if sig[dp[pos]] < sig[dp[best]]:
            best = pos
    return best


def _recompute_neighbors(curve, dp, sig, removed_pos):
    dps = DominantPointSet(curve, tuple(dp))
    m = len(dp)
    for pos in ((removed_pos - 1) % m, removed_pos % m):
        sig[dp[pos]] = significance(curve, dps, pos)


def eliminate_to_count(curve: DigitalCurve, m: int) -> Approximation:
    """Remove least significant dominant points until exactly ``m`` remain.

    Raises
    ------
    TargetTooSmall
        m below the minimum polygon size 3.
    TargetTooLarge
        m exceeds the initial dominant point count.
    """
    init = initial_indices(curve)
    if m < MIN_POLYGON_SIZE:
        raise TargetTooSmall(
            f"target below minimum polygon size {MIN_POLYGON_SIZE}")
    if m > len(init):
        raise TargetTooLarge(
            f"target {m} exceeds the {len(init)} initial dominant points")

    dp = list(init)
    sig = significance_table(curve, DominantPointSet(curve, init))
    trace = []
    while len(dp) > m:
        pos = _argmin_position(dp, sig)
        removed = dp.pop(pos)
        sig_removed = sig.pop(removed)
        _recompute_neighbors(curve, dp, sig, pos)
        trace.append(EliminationStep(
            removed_index=removed,
            sig_at_removal=sig_removed,
            metrics_after=metrics_report(curve, DominantPointSet(curve, tuple(dp)))))
    return Approximation(curve=curve, initial_indices=init,
                         dominant_points=DominantPointSet(curve, tuple(dp)),
                         trace=tuple(trace))


def eliminate_to_error(curve: DigitalCurve, max_ise: float) -> Approximation:
    """Remove dominant points while the resulting ISE stays within ``max_ise``.

    Stops before the first removal that would push ISE over budget and never
    goes below 3 points.  If even the initial polygon exceeds the budget the
    initial set is returned unchanged.
    """
    if max_ise < 0:
        raise ValueError("max_ise must be >= 0")
    init = initial_indices(curve)
    dp = list(init)
    sig = significance_table(curve, DominantPointSet(curve, init))
    trace = []
    while len(dp) > MIN_POLYGON_SIZE:
        pos = _argmin_position(dp, sig)
        candidate = dp[:pos] + dp[pos + 1:]
        rep = metrics_report(curve, DominantPointSet(curve, tuple(candidate)))
        if rep.ise > max_ise:
            break
        removed = dp.pop(pos)
        sig_removed = sig.pop(removed)
        _recompute_neighbors(curve, dp, sig, pos)
        trace.append(EliminationStep(removed_index=removed,
                                     sig_at_removal=sig_removed,
                                     metrics_after=rep))
    return Approximation(curve=curve, initial_indices=init,
                         dominant_points=DominantPointSet(curve, tuple(dp)),
                         trace=tuple(trace))
