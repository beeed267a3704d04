"""Curve and image ingestion: text fixtures, PBM/PGM masks, rotations.

File conventions
----------------
Curve text: one ``x y`` (or ``x,y``) pair per line, optional leading header
line ``closed``/``open`` (default closed), ``#`` starts a comment.  Loaded
closed curves are normalized to clockwise orientation.

Images: PBM (P1/P4) where 1 = black = foreground, and PGM (P2/P5) where
values >= 128 count as foreground.  Image row 0 is the top scanline; pixel
(row, col) maps to curve point (col, height-1-row), which flips the y axis
up to match the library convention.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .curve import DigitalCurve, Point, build_curve, signed_area2
from .errors import DegenerateComponent, EmptyImage, ParseError

# --------------------------------------------------------------------------
# curve text files


def _normalize_clockwise(curve: DigitalCurve) -> DigitalCurve:
    """Reverse a counterclockwise closed curve, keeping its start point."""
    if not curve.closed:
        return curve
    if signed_area2(curve.points) > 0.0:
        pts = (curve.points[0],) + tuple(reversed(curve.points[1:]))
        return DigitalCurve(pts, True)
    return curve


def load_curve_file(data: bytes | str) -> DigitalCurve:
    """Parse curve text into a validated, clockwise-normalized curve.

    Raises
    ------
    ParseError
        Malformed line (reported with its 1-based number).
    TooFewPoints, NonAdjacent
        Propagated from curve validation.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(0, f"not a text file: {exc}") from None
    closed = True
    saw_header = False
    points: list[Point] = []
    for lineno, raw in enumerate(data.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        lowered = line.lower()
        if lowered in ("closed", "open"):
            if saw_header or points:
                raise ParseError(lineno, "header must be the first line")
            closed = lowered == "closed"
            saw_header = True
            continue
        fields = line.replace(",", " ").split()
        if len(fields) != 2:
            raise ParseError(lineno, f"expected 'x y', got {raw.strip()!r}")
        try:
            points.append((float(fields[0]), float(fields[1])))
        except ValueError:
            raise ParseError(lineno, f"bad coordinate in {raw.strip()!r}") from None
    if not points:
        raise ParseError(0, "no coordinates found")
    return _normalize_clockwise(build_curve(points, closed))


def _fmt_coord(v: float) -> str:
    return str(int(v)) if v.is_integer() else repr(v)


def serialize_curve(curve: DigitalCurve) -> str:
    """Curve text that reloads to the exact same coordinates."""
    lines = ["closed" if curve.closed else "open"]
    lines.extend(f"{_fmt_coord(x)} {_fmt_coord(y)}" for x, y in curve.points)
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# binary images


@dataclass(frozen=True, eq=False)
class BinaryImage:
    """Row-major bit grid; row 0 is the top scanline, True = foreground."""

    width: int
    height: int
    pixels: np.ndarray

    def __post_init__(self):
        if self.pixels.shape != (self.height, self.width):
            raise ValueError(
                f"pixel grid {self.pixels.shape} does not match "
                f"{self.height}x{self.width}")
        if self.pixels.dtype != np.bool_:
            raise ValueError("pixels must be a boolean array")
        self.pixels.setflags(write=False)


class _PnmReader:
    """Token scanner for the netpbm header (whitespace + '#' comments)."""

    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def token(self) -> bytes:
        self._skip_separators()
        if self.pos >= len(self.data):
            raise ParseError(0, "truncated image header")
        start = self.pos
        while self.pos < len(self.data) and not self.data[self.pos:self.pos + 1].isspace():
            self.pos += 1
        return self.data[start:self.pos]

    def int_token(self) -> int:
        tok = self.token()
        try:
            return int(tok)
        except ValueError:
            raise ParseError(0, f"bad header token {tok!r}") from None

    def raster(self) -> bytes:
        # binary raster starts after exactly one whitespace byte
        self.pos += 1
        return self.data[self.pos:]

    def _skip_separators(self):
        data = self.data
        while self.pos < len(data):
            ch = data[self.pos:self.pos + 1]
            if ch.isspace():
                self.pos += 1
            elif ch == b"#":
                while self.pos < len(data) and data[self.pos:self.pos + 1] not in (b"\n", b"\r"):
                    self.pos += 1
            else:
                break


def load_image(data: bytes) -> BinaryImage:
    """Decode a PBM (P1/P4) or PGM (P2/P5) byte stream.

    Raises
    ------
    ParseError
        Unknown magic number or truncated/malformed payload.
    """
    reader = _PnmReader(data)
    magic = reader.token()
    if magic not in (b"P1", b"P2", b"P4", b"P5"):
        raise ParseError(0, f"unsupported image magic {magic!r}")
    width = reader.int_token()
    height = reader.int_token()
    if width <= 0 or height <= 0:
        raise ParseError(0, f"bad image size {width}x{height}")

    if magic == b"P1":
        bits = []
        while len(bits) < width * height:
            tok = reader.token()
            for ch in tok.decode("ascii", "replace"):
                if ch not in "01":
                    raise ParseError(0, f"bad P1 digit {ch!r}")
                bits.append(ch == "1")
        grid = np.array(bits[:width * height], dtype=bool).reshape(height, width)
    elif magic == b"P2":
        maxval = reader.int_token()
        if maxval <= 0:
            raise ParseError(0, f"bad maxval {maxval}")
        vals = [reader.int_token() for _ in range(width * height)]
        grid = np.array(vals, dtype=int).reshape(height, width) >= 128
    elif magic == b"P4":
        raster = reader.raster()
        row_bytes = (width + 7) // 8
        if len(raster) < row_bytes * height:
            raise ParseError(0, "truncated P4 raster")
        rows = np.frombuffer(raster[:row_bytes * height], dtype=np.uint8)
        rows = np.unpackbits(rows.reshape(height, row_bytes), axis=1)
        grid = rows[:, :width].astype(bool)
    else:  # P5
        maxval = reader.int_token()
        if maxval <= 0:
            raise ParseError(0, f"bad maxval {maxval}")
        raster = reader.raster()
        if maxval < 256:
            need = width * height
            if len(raster) < need:
                raise ParseError(0, "truncated P5 raster")
            vals = np.frombuffer(raster[:need], dtype=np.uint8)
        else:
            need = 2 * width * height
            if len(raster) < need:
                raise ParseError(0, "truncated P5 raster")
            vals = np.frombuffer(raster[:need], dtype=">u2")
        grid = vals.reshape(height, width) >= 128
    return BinaryImage(width=width, height=height, pixels=grid)


# --------------------------------------------------------------------------
# contour tracing

# Moore neighborhood in (row, col) order, clockwise on screen starting north.
_RING = ((-1, 0), (-1, 1), (0, 1), (1, 1), (1, 0), (1, -1), (0, -1), (-1, -1))
_RING_INDEX = {d: i for i, d in enumerate(_RING)}


def _largest_component(pixels: np.ndarray) -> tuple[np.ndarray, tuple[int, int], int]:
    """Mask, top-left pixel and size of the largest 8-connected component."""
    h, w = pixels.shape
    labels = np.full((h, w), -1, dtype=int)
    components = []  # (size, first_pixel, label)
    next_label = 0
    for r in range(h):
        for c in range(w):
            if not pixels[r, c] or labels[r, c] >= 0:
                continue
            queue = deque([(r, c)])
            labels[r, c] = next_label
            size = 0
            while queue:
                cr, cc = queue.popleft()
                size += 1
                for dr, dc in _RING:
                    nr, nc = cr + dr, cc + dc
                    if 0 <= nr < h and 0 <= nc < w and pixels[nr, nc] \
                            and labels[nr, nc] < 0:
                        labels[nr, nc] = next_label
                        queue.append((nr, nc))
            components.append((size, (r, c), next_label))
            next_label += 1
    if not components:
        raise EmptyImage("no foreground pixel to trace")
    # biggest wins; ties go to the component met first in scan order
    components.sort(key=lambda t: (-t[0], t[1]))
    size, first, label = components[0]
    return labels == label, first, size


def _moore_trace(mask: np.ndarray, start: tuple[int, int]) -> list[tuple[int, int]]:
    """Boundary pixel cycle of ``mask``, starting at its top-left pixel.

    Walks the Moore neighborhood clockwise from the backtrack position and
    stops when a (pixel, backtrack) state repeats, the robust form of
    Jacob's re-entered-from-the-start-direction criterion: on spur shapes
    the artificial initial backtrack can be transient, so the cycle is cut
    at the first repeated state and rotated back to the start pixel.
    """
    h, w = mask.shape

    def neighbors_from(pixel, back):
        # scan the ring clockwise beginning just after the backtrack position
        base = _RING_INDEX[(back[0] - pixel[0], back[1] - pixel[1])]
        for off in range(1, 9):
            i = (base + off) % 8
            dr, dc = _RING[i]
            yield (pixel[0] + dr, pixel[1] + dc), i

    state = (start, (start[0], start[1] - 1))  # entered scanning left to right
    seen = {state: 0}
    pixels = [start]
    limit = 8 * int(mask.sum()) + 16
    for _ in range(limit):
        pixel, back = state
        nxt = None
        for (nr, nc), i in neighbors_from(pixel, back):
            if 0 <= nr < h and 0 <= nc < w and mask[nr, nc]:
                prev = _RING[(i - 1) % 8]
                nxt = ((nr, nc), (pixel[0] + prev[0], pixel[1] + prev[1]))
                break
        if nxt is None:       # isolated pixel
            return pixels
        state = nxt
        if state in seen:
            cycle = pixels[seen[state]:]
            pivot = cycle.index(min(cycle))
            return cycle[pivot:] + cycle[:pivot]
        seen[state] = len(pixels)
        pixels.append(state[0])
    raise RuntimeError("contour trace failed to close")  # pragma: no cover


def trace_contour(image: BinaryImage) -> DigitalCurve:
    """Closed clockwise boundary of the largest foreground component.

    Raises
    ------
    EmptyImage
        No foreground pixel at all.
    DegenerateComponent
        Largest component has fewer than three boundary pixels.
    """
    mask, start, size = _largest_component(image.pixels)
    if size <= 2:
        raise DegenerateComponent(
            f"component of {size} pixel(s) has no closed boundary")
    contour = _moore_trace(mask, start)
    if len(contour) < 3:
        raise DegenerateComponent(
            f"boundary of {len(contour)} pixel(s) cannot close")
    top = image.height - 1
    points = [(float(c), float(top - r)) for r, c in contour]
    return _normalize_clockwise(build_curve(points, closed=True))


# --------------------------------------------------------------------------
# rotation

_EXACT_TRIG = {0.0: (1.0, 0.0), 90.0: (0.0, 1.0),
               180.0: (-1.0, 0.0), 270.0: (0.0, -1.0)}


def _snap(v: float) -> float:
    # keep the translation on a 2^-20 grid so integer inputs rotate to
    # exactly representable coordinates (differences stay exact, which makes
    # quarter-turn pipelines bit-identical)
    return math.ldexp(round(math.ldexp(v, 20)), -20)


def rotate_curve(curve: DigitalCurve, angle_deg: float) -> DigitalCurve:
    """Rotate every point about the curve centroid by ``angle_deg`` degrees.

    Exact multiples of 90 degrees use exact trig factors, so integer-grid
    deltas map to integer-grid deltas without rounding; 0 (and 360) return
    coordinates bit-identical to the input.
    """
    a = float(angle_deg) % 360.0
    trig = _EXACT_TRIG.get(a)
    if trig is None:
        rad = math.radians(a)
        c, s = math.cos(rad), math.sin(rad)
    else:
        c, s = trig
    cx, cy = curve.centroid()
    tx = _snap(cx - (c * cx - s * cy))
    ty = _snap(cy - (s * cx + c * cy))
    pts = tuple((c * x - s * y + tx, s * x + c * y + ty)
                for x, y in curve.points)
    return DigitalCurve(pts, curve.closed)
