"""Polygonal approximation of closed digital curves by dominant-point elimination."""

from . import errors
from .curve import (ChainCode, DigitalCurve, DominantPointSet, arc_indices,
                    arc_points, build_curve, chain_code)
from .eliminate import (Approximation, EliminationStep, eliminate_to_count,
                        eliminate_to_error, initial_indices)
from .estimators import (DominantPointEliminator, RDPSimplifier,
                         check_curve_points)
from .ingest import (BinaryImage, load_curve_file, load_image, rotate_curve,
                     serialize_curve, trace_contour)
from .metrics import (MetricsReport, RotationRow, metrics_report,
                      per_point_deviations, rotation_report)
from .rdp import rdp, rdp_to_count
from .segmentation import (DEFAULT_BREAK_TOL, InitialSegmentation,
                           SegmentationSource, break_points_real,
                           initial_dominant_points)
from .significance import (ChordFrame, ProjectionRegion, chord_frame,
                           classify_projection, point_contribution,
                           significance, significance_table)

__version__ = "0.1.0"

__all__ = [
    "Approximation", "BinaryImage", "ChainCode", "ChordFrame",
    "DEFAULT_BREAK_TOL", "DigitalCurve", "DominantPointEliminator",
    "DominantPointSet", "EliminationStep", "InitialSegmentation",
    "MetricsReport", "ProjectionRegion", "RDPSimplifier", "RotationRow",
    "SegmentationSource", "arc_indices", "arc_points", "break_points_real",
    "build_curve", "chain_code", "check_curve_points", "chord_frame",
    "classify_projection", "eliminate_to_count", "eliminate_to_error",
    "errors", "initial_dominant_points", "initial_indices", "load_curve_file",
    "load_image", "metrics_report", "per_point_deviations",
    "point_contribution", "rdp", "rdp_to_count", "rotate_curve",
    "rotation_report", "serialize_curve", "significance",
    "significance_table", "trace_contour",
]
