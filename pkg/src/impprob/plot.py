"""Barycentric SVG drawings of credal sets on three outcomes.

Corners sit at ``r = (0, 1.732)``, ``g = (-1, 0)`` and ``b = (1, 0)``; the
height is the rational 433/250 rather than the square root of three so
every coordinate stays exact until it is printed with six decimals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from .credal import CredalSet
from .errors import DimensionError

HEIGHT = Fraction(433, 250)
CORNERS = {"r": (Fraction(0), HEIGHT), "g": (Fraction(-1), Fraction(0)), "b": (Fraction(1), Fraction(0))}

# Canvas placement of the unit triangle.
SCALE = Fraction(120)
ORIGIN = (Fraction(150), Fraction(240))
WIDTH, CANVAS_HEIGHT = 300, 280

Point = Tuple[Fraction, Fraction]


def barycentric(p: Sequence) -> Point:
    """Cartesian position of a distribution ``(p_r, p_g, p_b)`` in the triangle."""
    if len(p) != 3:
        raise DimensionError("barycentric plots need distributions on three outcomes")
    x = sum(Fraction(w) * CORNERS[c][0] for w, c in zip(p, "rgb"))
    y = sum(Fraction(w) * CORNERS[c][1] for w, c in zip(p, "rgb"))
    return x, y


def to_canvas(pt: Point) -> Point:
    """Triangle coordinates to SVG coordinates (y grows downwards)."""
    return ORIGIN[0] + SCALE * pt[0], ORIGIN[1] - SCALE * pt[1]


def fmt(x: Fraction) -> str:
    return f"{float(x):.6f}" if x.denominator != 1 else f"{x.numerator}.000000"


def _ccw(points: List[Point]) -> List[Point]:
    """Counter-clockwise cyclic order of convex-position points, exact."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def polygon_vertices(S: CredalSet) -> List[Point]:
    """Canvas coordinates of the extreme points of ``S`` in drawing order."""
    if S.dim != 3:
        raise DimensionError(f"cannot draw a credal set on {S.dim} outcomes")
    return [to_canvas(q) for q in _ccw([barycentric(p) for p in S.extremes])]


def _points_attr(pts) -> str:
    return " ".join(f"{fmt(x)},{fmt(y)}" for x, y in pts)


def render_svg(S: CredalSet, title: str = "") -> str:
    """SVG text showing the triangle, its labelled corners and ``S``."""
    tri = [to_canvas(CORNERS[c]) for c in "rgb"]
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{CANVAS_HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {CANVAS_HEIGHT}">',
    ]
    if title:
        lines.append(f"  <title>{_escape(title)}</title>")
    lines.append(f'  <polygon class="simplex" points="{_points_attr(tri)}" '
                 'fill="none" stroke="black" stroke-width="1"/>')
    offsets = {"r": (0, -8), "g": (-14, 14), "b": (6, 14)}
    colours = {"r": "red", "g": "green", "b": "blue"}
    for c, (x, y) in zip("rgb", tri):
        dx, dy = offsets[c]
        lines.append(f'  <text class="corner" x="{fmt(x + dx)}" y="{fmt(y + dy)}" '
                     f'fill="{colours[c]}" font-size="14">{c}</text>')
    verts = polygon_vertices(S)
    if len(verts) >= 2:
        lines.append(f'  <polygon class="credal" points="{_points_attr(verts)}" '
                     'fill="#7f7f7f" fill-opacity="0.5" stroke="black" stroke-width="2"/>')
    for x, y in verts:
        lines.append(f'  <circle class="vertex" cx="{fmt(x)}" cy="{fmt(y)}" r="3" fill="black"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
