"""SVG 1.1 rendering of drawings. Floats are fine here; nothing is decided from them."""

from __future__ import annotations

from typing import Mapping
from xml.sax.saxutils import escape

from .graphs import GeometricGraph, crossing_edges

SIZE = 480
MARGIN = 40


def render_svg(g: GeometricGraph, labels: Mapping[str, str] | None = None) -> str:
    """Straight-line drawing; crossing edges in red, optional label overlay per vertex."""
    xs = [float(p.x) for p in g.coords.values()] or [0.0]
    ys = [float(p.y) for p in g.coords.values()] or [0.0]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    scale = (SIZE - 2 * MARGIN) / span

    def pos(v: str) -> tuple[float, float]:
        p = g.coords[v]
        # SVG y grows downward
        return MARGIN + (float(p.x) - min(xs)) * scale, SIZE - MARGIN - (float(p.y) - min(ys)) * scale

    crossing = set(crossing_edges(g))
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    for e in g.edge_ids():
        (x1, y1), (x2, y2) = (pos(v) for v in g.edges[e])
        cls, color, width = ("crossing", "#d62728", 2.5) if e in crossing else ("plane", "#333333", 1.5)
        out.append(
            f'<line class="{cls}" data-edge="{escape(e)}" x1="{x1:.2f}" y1="{y1:.2f}" '
            f'x2="{x2:.2f}" y2="{y2:.2f}" stroke="{color}" stroke-width="{width}"/>'
        )
    for v in g.vertices:
        x, y = pos(v)
        out.append(f'<circle data-vertex="{escape(v)}" cx="{x:.2f}" cy="{y:.2f}" r="5" fill="#1f77b4"/>')
        out.append(f'<text x="{x + 7:.2f}" y="{y - 7:.2f}" font-size="12" font-family="sans-serif">{escape(v)}</text>')
        if labels and v in labels:
            out.append(
                f'<text class="overlay" x="{x + 7:.2f}" y="{y + 16:.2f}" font-size="13" '
                f'font-weight="bold" fill="#2ca02c" font-family="sans-serif">{escape(str(labels[v]))}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
