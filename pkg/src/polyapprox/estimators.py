"""Scikit-learn style estimator facade over the approximation pipeline.

The simplifiers follow the sklearn contract (``get_params``/``set_params``,
``fit`` returns self, fitted attributes carry a trailing underscore) without
depending on scikit-learn itself, so they clone and compose inside sklearn
pipelines via duck typing.
"""

from __future__ import annotations

import inspect

import numpy as np

from .curve import DigitalCurve, build_curve
from .eliminate import eliminate_to_count, eliminate_to_error
from .errors import NotFittedError
from .metrics import metrics_report
from .rdp import rdp, rdp_to_count


def check_curve_points(X) -> np.ndarray:
    """Validate input as a float (n, 2) array of distinct consecutive points.

    Rejects consecutive duplicate rows (including a trailing repeat of the
    first row) so array row numbers and curve indices stay interchangeable.
    """
    arr = np.asarray(X, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected an (n, 2) point array, got shape {arr.shape}")
    if arr.shape[0] < 3:
        raise ValueError(f"need at least 3 points, got {arr.shape[0]}")
    if not np.isfinite(arr).all():
        raise ValueError("coordinates must be finite")
    if (arr[1:] == arr[:-1]).all(axis=1).any() or (arr[0] == arr[-1]).all():
        raise ValueError("consecutive duplicate points (drop any closing repeat)")
    return arr


class _SimplifierBase:
    """Shared sklearn-style parameter handling and transform plumbing."""

    def get_params(self, deep: bool = True) -> dict:
        names = inspect.signature(type(self).__init__).parameters
        return {k: getattr(self, k) for k in names if k != "self"}

    def set_params(self, **params):
        valid = self.get_params()
        for key, value in params.items():
            if key not in valid:
                raise ValueError(f"invalid parameter {key!r} for {type(self).__name__}")
            setattr(self, key, value)
        return self

    def __repr__(self):
        args = ", ".join(f"{k}={v!r}" for k, v in sorted(self.get_params().items()))
        return f"{type(self).__name__}({args})"

    def _fit_curve(self, X) -> DigitalCurve:
        arr = check_curve_points(X)
        return build_curve([tuple(p) for p in arr], closed=True)

    def transform(self, X) -> np.ndarray:
        """Rows of ``X`` at the fitted dominant point indices.

        ``X`` must have the same number of rows as the curve the estimator
        was fitted on (e.g. the same curve, or a rigid transform of it).
        """
        if not hasattr(self, "indices_"):
            raise NotFittedError(f"{type(self).__name__} is not fitted yet")
        arr = check_curve_points(X)
        if arr.shape[0] != self.n_input_points_:
            raise ValueError(
                f"X has {arr.shape[0]} rows, fitted on {self.n_input_points_}")
        return arr[self.indices_]

    def fit_transform(self, X, y=None) -> np.ndarray:
        return self.fit(X).transform(X)


class DominantPointEliminator(_SimplifierBase):
    """Iterative dominant-point elimination as a transformer.

    Exactly one of ``n_points`` (stop at that many vertices) or ``max_ise``
    (remove while the integral square error stays within budget) must be set.

    Attributes (after ``fit``)
    --------------------------
    curve_ : DigitalCurve          validated closed input curve
    indices_ : ndarray of int      retained curve indices, increasing
    approximation_ : Approximation full elimination result with trace
    report_ : MetricsReport        metrics of the final polygon
    n_input_points_ : int
    """

    def __init__(self, n_points=None, max_ise=None):
        self.n_points = n_points
        self.max_ise = max_ise

    def fit(self, X, y=None):
        if (self.n_points is None) == (self.max_ise is None):
            raise ValueError("set exactly one of n_points or max_ise")
        curve = self._fit_curve(X)
        if self.n_points is not None:
            approx = eliminate_to_count(curve, int(self.n_points))
        else:
            approx = eliminate_to_error(curve, float(self.max_ise))
        self.curve_ = curve
        self.approximation_ = approx
        self.indices_ = np.array(approx.dominant_points.indices, dtype=int)
        self.report_ = metrics_report(curve, approx.dominant_points)
        self.n_input_points_ = curve.n
        return self


class RDPSimplifier(_SimplifierBase):
    """Ramer-Douglas-Peucker baseline with the same estimator surface.

    Set ``epsilon`` for the classic deviation budget or ``n_points`` to
    bisect epsilon down to an exact vertex count (exactly one of the two).
    """

    def __init__(self, epsilon=None, n_points=None):
        self.epsilon = epsilon
        self.n_points = n_points

    def fit(self, X, y=None):
        if (self.epsilon is None) == (self.n_points is None):
            raise ValueError("set exactly one of epsilon or n_points")
        curve = self._fit_curve(X)
        if self.epsilon is not None:
            dps = rdp(curve, float(self.epsilon))
        else:
            dps = rdp_to_count(curve, int(self.n_points))
        self.curve_ = curve
        self.indices_ = np.array(dps.indices, dtype=int)
        self.report_ = metrics_report(curve, dps)
        self.n_input_points_ = curve.n
        return self
