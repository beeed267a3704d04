"""Exception types raised by the polyapprox pipeline."""


class PolyapproxError(Exception):
    """Base class for every error raised by this package."""


class TooFewPoints(PolyapproxError):
    """Closed curve with fewer than three points (or an empty point list)."""


class NonAdjacent(PolyapproxError):
    """Integer-grid curve with a step whose Chebyshev length is not 1."""


class NotOnGrid(PolyapproxError):
    """Operation requiring integer coordinates got a real-valued curve."""


class OpenCurveWrap(PolyapproxError):
    """Circular traversal requested on an open curve."""


class DegenerateChord(PolyapproxError):
    """Chord endpoints coincide, so no chord frame exists."""


class TargetTooSmall(PolyapproxError):
    """Requested polygon size is below the minimum of 3."""


class TargetTooLarge(PolyapproxError):
    """Requested polygon size exceeds the initial dominant point count."""


class ParseError(PolyapproxError):
    """Malformed curve text file.  Carries the 1-based offending line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class EmptyImage(PolyapproxError):
    """Binary image with no foreground pixel."""


class DegenerateComponent(PolyapproxError):
    """Foreground component too small to have a closed boundary (1-2 pixels)."""


class NotFittedError(PolyapproxError, AttributeError):
    """Estimator used before ``fit`` was called."""
