"""Self-contained SVG rendering of a single colored triangulation."""

from __future__ import annotations

import math

from .geometry import ColoredTriangulation

__all__ = ["render_svg"]

_SIZE = 400
_MARGIN = 40


def _layout(m: int) -> list[tuple[float, float]]:
    # vertex 0 at the top, labels increasing counterclockwise
    cx = cy = _SIZE / 2
    radius = _SIZE / 2 - _MARGIN
    pts = []
    for i in range(m):
        angle = math.pi / 2 + 2 * math.pi * i / m
        pts.append((cx + radius * math.cos(angle), cy - radius * math.sin(angle)))
    return pts


def render_svg(ct: ColoredTriangulation) -> str:
    """SVG document: polygon on a circle, chords labeled by color."""
    pts = _layout(ct.m)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    boundary = " ".join(f"{x:.1f},{y:.1f}" for x, y in pts)
    parts.append(
        f'<polygon points="{boundary}" fill="none" stroke="black" stroke-width="1.5"/>'
    )
    for color, c in enumerate(ct.chords):
        (x1, y1), (x2, y2) = (pts[v] for v in sorted(c))
        parts.append(
            f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" '
            'stroke="steelblue" stroke-width="1.2"/>'
        )
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        parts.append(
            f'<text x="{mx:.1f}" y="{my:.1f}" font-size="13" fill="crimson" '
            f'text-anchor="middle">{color}</text>'
        )
    for i, (x, y) in enumerate(pts):
        cx, cy = _SIZE / 2, _SIZE / 2
        lx = x + (x - cx) * 0.09
        ly = y + (y - cy) * 0.09
        parts.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="3" fill="black"/>')
        parts.append(
            f'<text x="{lx:.1f}" y="{ly:.1f}" font-size="12" '
            f'text-anchor="middle" dominant-baseline="middle">{i}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
