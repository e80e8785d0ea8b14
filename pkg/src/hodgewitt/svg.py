"""Direct SVG rendering of polygon overlays.

Coordinates are scaled exactly and converted to float only when written.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence
from xml.sax.saxutils import escape

from .polygon import Polygon

WIDTH, HEIGHT, MARGIN = 800, 600, 60

STYLES = {
    "newton": "",
    "slope-number": ' stroke-dasharray="10 6"',
    "hodge": ' stroke-dasharray="2 5"',
}
COLORS = {"newton": "#1f4e9c", "slope-number": "#c2471b", "hodge": "#2b8a3e"}


def _fmt(v: Fraction) -> str:
    return f"{float(v):.3f}"


def render_svg(polygons: Sequence[tuple[str, Polygon]], title: str = "") -> str:
    xs = [x for _, poly in polygons for x, _ in poly.points]
    ys = [y for _, poly in polygons for _, y in poly.points]
    x_max = max(xs) or Fraction(1)
    y_min, y_max = min(ys), max(ys)
    if y_max == y_min:
        y_max = y_min + 1
    sx = Fraction(WIDTH - 2 * MARGIN) / x_max
    sy = Fraction(HEIGHT - 2 * MARGIN) / (y_max - y_min)

    def point(x: Fraction, y: Fraction) -> str:
        return f"{_fmt(MARGIN + x * sx)},{_fmt(HEIGHT - MARGIN - (y - y_min) * sy)}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'  <rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'  <line x1="{MARGIN}" y1="{HEIGHT - MARGIN}" x2="{WIDTH - MARGIN}" '
        f'y2="{HEIGHT - MARGIN}" stroke="#999"/>',
        f'  <line x1="{MARGIN}" y1="{MARGIN}" x2="{MARGIN}" y2="{HEIGHT - MARGIN}" stroke="#999"/>',
    ]
    if title:
        out.append(f'  <text x="{MARGIN}" y="30" font-family="sans-serif" '
                   f'font-size="16">{escape(title)}</text>')
    for name, poly in polygons:
        pts = " ".join(point(x, y) for x, y in poly.points)
        out.append(
            f'  <polyline class="{name}" points="{pts}" fill="none" '
            f'stroke="{COLORS.get(name, "black")}" stroke-width="2"{STYLES.get(name, "")}/>'
        )
    for k, (name, _) in enumerate(polygons):
        y = MARGIN + 20 * k
        x0 = WIDTH - MARGIN - 170
        out.append(
            f'  <line x1="{x0}" y1="{y}" x2="{x0 + 40}" y2="{y}" '
            f'stroke="{COLORS.get(name, "black")}" stroke-width="2"{STYLES.get(name, "")}/>'
        )
        out.append(f'  <text x="{x0 + 50}" y="{y + 5}" font-family="sans-serif" '
                   f'font-size="14">{escape(name)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
