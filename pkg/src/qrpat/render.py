"""Deterministic rendering of residue plots.

Raster output is 8-bit binary PGM (P5); vector overlays are SVG 1.1.
Pixel placement uses integer arithmetic only, and SVG coordinates are
formatted with a fixed number of digits, so identical inputs produce
byte-identical files on every platform.  Exact rational membership
checks happen before anything is converted to floating point.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .parabola import fraction_params
from .patterns import bundle_parameter, denominator_set, vertex_on_bundle
from .residues import ReducedFraction, check_modulus, farey_fractions, qr_mod

__all__ = [
    "BundleCurve",
    "Canvas",
    "Scene",
    "VertexMarker",
    "overlay_predictions",
    "read_pgm",
    "render_scatter",
    "render_sum_squares",
    "sample_bundle_curve",
    "write_pgm",
    "write_svg",
]

# Polyline resolution for the wrapped bundle curves (points per unit X).
CURVE_SAMPLES = 1024


@dataclass
class Canvas:
    """Row-major grayscale raster, origin top-left.

    Scatter plots place residue 0 on the bottom row.
    """

    width: int
    height: int
    pixels: bytearray

    def __post_init__(self) -> None:
        if len(self.pixels) != self.width * self.height:
            raise ValueError(
                f"pixel buffer of {len(self.pixels)} bytes does not match "
                f"{self.width}x{self.height}"
            )

    @classmethod
    def blank(cls, width: int, height: int, fill: int = 255) -> "Canvas":
        return cls(width, height, bytearray([fill]) * (width * height))

    def pixel(self, col: int, row: int) -> int:
        return self.pixels[row * self.width + col]


@dataclass(frozen=True)
class VertexMarker:
    """A predicted family vertex in normalized coordinates."""

    b: int
    a: int
    k: int
    x: float
    y: float
    line_index: int | None = None


@dataclass(frozen=True)
class BundleCurve:
    """Sampled polylines of one wrapped bundle curve, split at mod-1 wraps."""

    n: int
    segments: tuple[tuple[tuple[float, float], ...], ...]


@dataclass
class Scene:
    """Normalized scatter points, vertex markers and bundle curves."""

    width: int
    height: int
    points: list[tuple[float, float]] = field(default_factory=list)
    curves: list[BundleCurve] = field(default_factory=list)
    markers: list[VertexMarker] = field(default_factory=list)


def render_scatter(m: int, width: int, height: int, half_range: bool = True) -> Canvas:
    """Plot (x, x*x mod m) as black pixels on white.

    With half_range only 0 <= x < m/2 is drawn (the upper half mirrors
    it) and the x axis spans the plotted range; otherwise x covers
    [0, m).  The residue axis always spans [0, m) with 0 at the bottom.
    """
    check_modulus(m)
    if width < 16 or height < 16:
        raise ValueError(f"canvas must be at least 16x16, got {width}x{height}")
    canvas = Canvas.blank(width, height)
    if half_range:
        xs = range((m + 1) // 2)
        x_scale = 2 * width
    else:
        xs = range(m)
        x_scale = width
    pixels = canvas.pixels
    for x in xs:
        r = x * x % m
        col = x * x_scale // m
        row = height - 1 - r * height // m
        pixels[row * width + col] = 0
    return canvas


def render_sum_squares(m: int, size: int) -> Canvas:
    """Grayscale grid of (x*x + y*y) mod m over a size x size sampling.

    Sample u maps to coordinate floor(u * m / size); values scale
    linearly so that m - 1 becomes white (255).
    """
    check_modulus(m)
    if size < 2:
        raise ValueError(f"grid size must be >= 2, got {size}")
    canvas = Canvas.blank(size, size)
    samples = [u * m // size for u in range(size)]
    squares = [v * v for v in samples]
    pixels = canvas.pixels
    for row in range(size):
        y2 = squares[row]
        base = row * size
        for col in range(size):
            pixels[base + col] = (squares[col] + y2) % m * 255 // (m - 1)
    return canvas


def sample_bundle_curve(s: int, n: int, samples: int = CURVE_SAMPLES) -> BundleCurve:
    """Sample Y = (2nX - sX^2) mod 1 over X in [0, 1].

    Sampling is exact (Fraction); a new polyline starts wherever the
    unwrapped value crosses an integer, so no segment jumps across the
    mod-1 seam.  Floats appear only in the stored coordinates.
    """
    segments: list[tuple[tuple[float, float], ...]] = []
    current: list[tuple[float, float]] = []
    prev_level = None
    for t in range(samples + 1):
        x = Fraction(t, samples)
        g = 2 * n * x - s * x * x
        level = math.floor(g)
        if prev_level is not None and level != prev_level and current:
            segments.append(tuple(current))
            current = []
        current.append((float(x), float(g - level)))
        prev_level = level
    if current:
        segments.append(tuple(current))
    return BundleCurve(n, tuple(segments))


def overlay_predictions(
    m: int, max_denominator: int, period: int, width: int, height: int
) -> Scene:
    """Scene with the full scatter, predicted vertices and bundle curves.

    Vertices whose denominator is covered by the period are matched to a
    bundle line in exact arithmetic (raising if the match fails); the
    drawn curves span every matched line index.  Uncovered denominators
    still get markers but no guaranteed curve.
    """
    if m <= max_denominator * max_denominator:
        raise ValueError(
            f"modulus {m} must exceed max_denominator^2 = {max_denominator ** 2}"
        )
    s = bundle_parameter(m, period)
    covered = denominator_set(period, max_denominator)
    scene = Scene(width, height)
    scene.points = [(x / m, qr_mod(x, m) / m) for x in range(m)]
    indices: set[int] = set()
    for frac in sorted(farey_fractions(max_denominator), key=ReducedFraction.sort_key):
        params = fraction_params(m, frac)
        beta_prime = params.beta % (params.c * frac.b)
        on_line: dict[int, int] = {}
        if frac.b in covered:
            on_line = dict(vertex_on_bundle(m, period, frac))
            indices.update(on_line.values())
        for k in range(params.b_prime):
            y_v = (Fraction(beta_prime, frac.b * frac.b) + Fraction(k, params.b_prime)) % 1
            scene.markers.append(
                VertexMarker(
                    b=frac.b,
                    a=frac.a,
                    k=k,
                    x=frac.a / frac.b,
                    y=float(y_v),
                    line_index=on_line.get(k),
                )
            )
    n_max = max((abs(n) for n in indices), default=0)
    scene.curves = [sample_bundle_curve(s, n) for n in range(-n_max, n_max + 1)]
    return scene


def write_pgm(canvas: Canvas, path) -> None:
    """Write the canvas as binary PGM: P5, maxval 255, row-major top-down."""
    header = b"P5\n%d %d\n255\n" % (canvas.width, canvas.height)
    with open(path, "wb") as stream:
        stream.write(header)
        stream.write(bytes(canvas.pixels))


_PGM_HEADER = re.compile(rb"\AP5\n(\d+) (\d+)\n255\n")


def read_pgm(path) -> Canvas:
    """Read a PGM file written by write_pgm back into a Canvas."""
    with open(path, "rb") as stream:
        raw = stream.read()
    match = _PGM_HEADER.match(raw)
    if not match:
        raise ValueError(f"{path}: not a binary PGM produced by write_pgm")
    width, height = int(match.group(1)), int(match.group(2))
    payload = raw[match.end():]
    if len(payload) != width * height:
        raise ValueError(f"{path}: expected {width * height} pixel bytes, got {len(payload)}")
    return Canvas(width, height, bytearray(payload))


def _fmt(value: float) -> str:
    return f"{value:.6f}"


def write_svg(scene: Scene, path) -> None:
    """Write the scene as SVG 1.1.

    Element order is fixed: scatter points (1-unit squares), then bundle
    curves by ascending line index, then vertex markers (circles) by
    (denominator, numerator, vertex index).  All coordinates carry
    exactly six decimal digits, so equal scenes give identical bytes.
    """
    width, height = scene.width, scene.height
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        '<g fill="black">',
    ]
    for x, y in scene.points:
        parts.append(
            f'<rect x="{_fmt(x * width)}" y="{_fmt((1.0 - y) * height - 1.0)}" '
            'width="1" height="1"/>'
        )
    parts.append("</g>")
    parts.append('<g fill="none" stroke="#1f77b4" stroke-width="0.75">')
    for curve in sorted(scene.curves, key=lambda c: c.n):
        for segment in curve.segments:
            if len(segment) < 2:
                continue
            coords = " ".join(
                f"{_fmt(x * width)},{_fmt((1.0 - y) * height)}" for x, y in segment
            )
            parts.append(f'<polyline points="{coords}"/>')
    parts.append("</g>")
    parts.append('<g fill="none" stroke="#d62728">')
    for marker in sorted(scene.markers, key=lambda v: (v.b, v.a, v.k)):
        parts.append(
            f'<circle cx="{_fmt(marker.x * width)}" cy="{_fmt((1.0 - marker.y) * height)}" r="3"/>'
        )
    parts.append("</g>")
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="\n") as stream:
        stream.write("\n".join(parts) + "\n")
