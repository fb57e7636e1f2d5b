"""Deterministic SVG pictures of the Dyck-path model.

The drawing shows a light grid, the labeled Dyck path of a g-vector, and
one horizontal chord per matched up/down pair at height nesting depth
plus one half, in a distinct color per multislalom component.  Output is
byte-identical for equal input and options.
"""

from __future__ import annotations

import colorsys
import random
from typing import Sequence

from .dyck import reconstruct_multislalom


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _palette(count: int, seed: int) -> list[str]:
    # well-spaced hues; the seed only rotates the starting point
    rng = random.Random(seed)
    hue = rng.random()
    colors = []
    for _ in range(count):
        r, g, b = colorsys.hsv_to_rgb(hue, 0.70, 0.72)
        colors.append(f"#{int(r * 255):02x}{int(g * 255):02x}{int(b * 255):02x}")
        hue = (hue + 0.618033988749895) % 1.0
    return colors


def render_dyck(
    g: Sequence[int],
    *,
    unit: float = 40.0,
    width: float | None = None,
    palette_seed: int = 0,
) -> str:
    """Standalone SVG document for the Dyck diagram and multislalom of g."""
    ms = reconstruct_multislalom(g)
    diagram = ms.diagram
    steps = diagram.steps
    heights = diagram.heights
    count = len(steps)
    top = max(heights)
    if width is not None:
        unit = width / (count + 2)
    margin = unit
    w = margin * 2 + count * unit
    h = margin * 2 + (top + 1) * unit

    def x(pos: float) -> float:
        return margin + pos * unit

    def y(height: float) -> float:
        return h - margin - height * unit

    chord_color: dict[tuple[int, int], str] = {}
    colors = _palette(len(ms.components), palette_seed)
    pair_by_up = dict(ms.matching)
    for comp, color in zip(ms.components, colors):
        for up in comp.chords:
            chord_color[(up, pair_by_up[up])] = color

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(w)}" '
        f'height="{_fmt(h)}" viewBox="0 0 {_fmt(w)} {_fmt(h)}">',
        f'<rect width="{_fmt(w)}" height="{_fmt(h)}" fill="#ffffff"/>',
        '<g stroke="#dddddd" stroke-width="1">',
    ]
    for k in range(count + 1):
        parts.append(
            f'<line x1="{_fmt(x(k))}" y1="{_fmt(y(0))}" '
            f'x2="{_fmt(x(k))}" y2="{_fmt(y(top))}"/>'
        )
    for level in range(top + 1):
        parts.append(
            f'<line x1="{_fmt(x(0))}" y1="{_fmt(y(level))}" '
            f'x2="{_fmt(x(count))}" y2="{_fmt(y(level))}"/>'
        )
    parts.append("</g>")

    points = " ".join(
        f"{_fmt(x(k))},{_fmt(y(hh))}" for k, hh in enumerate(heights)
    )
    parts.append(
        f'<polyline points="{points}" fill="none" stroke="#222222" '
        'stroke-width="2"/>'
    )

    parts.append(
        f'<g font-family="monospace" font-size="{_fmt(unit * 0.35)}" '
        'fill="#222222" text-anchor="middle">'
    )
    for k, (_, label) in enumerate(steps):
        mid = (heights[k] + heights[k + 1]) / 2
        parts.append(
            f'<text x="{_fmt(x(k + 0.5))}" y="{_fmt(y(mid - 0.45))}">'
            f"{label}</text>"
        )
    parts.append("</g>")

    parts.append('<g stroke-width="2.5" fill="none">')
    for up, down in ms.matching:
        level = heights[up] + 0.5
        parts.append(
            f'<line x1="{_fmt(x(up + 0.5))}" y1="{_fmt(y(level))}" '
            f'x2="{_fmt(x(down + 0.5))}" y2="{_fmt(y(level))}" '
            f'stroke="{chord_color[(up, down)]}"/>'
        )
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
