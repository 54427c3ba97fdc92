"""SVG diagrams of parallelograms.

The only floating-point code in the package lives here, and only to place
vertices on the page: a shape with base b, height h, and side s is drawn
with corners (0,0), (b,0), (b+x,h), (x,h) where x = sqrt(s^2 - h^2).  The
inner difference s^2 - h^2 is computed exactly before the one lossy square
root, so coordinates are correct to double-precision rounding.  All numbers
are printed with fixed 9-decimal formatting to keep output byte-stable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import amicability
from .core import Parallelogram

_LABEL_BAND = 28  # px reserved under the shapes for the caption line
_FONT_SIZE = 13


@dataclass(frozen=True)
class RenderSpec:
    """What to draw and how large the canvas is, in pixels."""

    parallelogram: Parallelogram
    include_companion: bool = False
    width: int = 640
    height: int = 360
    margin: int = 24


def model_vertices(shape: Parallelogram) -> list[tuple[float, float]]:
    """Unscaled vertex coordinates, y growing upward.

    The shear offset sqrt(side^2 - height^2) is well-defined because the
    height never exceeds the side.
    """
    height = shape.height
    offset_sq = Fraction(shape.side) ** 2 - height * height
    offset = math.sqrt(offset_sq.numerator / offset_sq.denominator)
    h = height.numerator / height.denominator
    b = float(shape.base)
    return [(0.0, 0.0), (b, 0.0), (b + offset, h), (offset, h)]


def _caption(shape: Parallelogram) -> str:
    return (
        f"base={shape.base} side={shape.side} "
        f"area={shape.area} perimeter={shape.perimeter}"
    )


def _fmt(value: float) -> str:
    return f"{value:.9f}"


def render_svg(spec: RenderSpec) -> str:
    """Standalone SVG text for the spec's parallelogram.

    With ``include_companion`` the deterministic companion is drawn beside
    it at the same scale; that raises NotAmicable when no companion exists.
    """
    shapes = [spec.parallelogram]
    if spec.include_companion:
        shapes.append(amicability.companion(spec.parallelogram))

    polygons = [model_vertices(shape) for shape in shapes]
    widths = [max(x for x, _ in poly) for poly in polygons]
    tallest = max(max(y for _, y in poly) for poly in polygons)

    gap = spec.margin if len(shapes) > 1 else 0
    avail_w = spec.width - 2 * spec.margin - gap * (len(shapes) - 1)
    avail_h = spec.height - 2 * spec.margin - _LABEL_BAND
    if avail_w <= 0 or avail_h <= 0:
        raise ValueError("canvas too small for the requested margins")
    scale = min(avail_w / sum(widths), avail_h / tallest)

    baseline = spec.margin + avail_h  # px row where model y = 0 sits
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" '
        f'height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">',
    ]
    cursor = float(spec.margin)
    for shape, poly, model_w in zip(shapes, polygons, widths):
        points = " ".join(
            f"{_fmt(cursor + x * scale)},{_fmt(baseline - y * scale)}"
            for x, y in poly
        )
        parts.append(
            f'<polygon points="{points}" fill="none" stroke="#000000" '
            'stroke-width="1.5"/>'
        )
        parts.append(
            f'<text x="{_fmt(cursor)}" y="{baseline + _LABEL_BAND - 8}" '
            f'font-family="monospace" font-size="{_FONT_SIZE}">'
            f"{_caption(shape)}</text>"
        )
        cursor += model_w * scale + gap
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
