"""SVG drawings of geometric graphs with highlighted paths."""
from __future__ import annotations

from typing import Mapping, Optional, Sequence
from xml.sax.saxutils import escape, quoteattr

from .graph import GeometricGraph, PathTrace

OVERLAY_COLORS = ("#1f4fd8", "#d8341f", "#1f9e3a", "#9a2fc2", "#d88a1f", "#178f8f")
MARGIN = 0.05


def _num(x: float) -> str:
    return format(float(x), ".6f").rstrip("0").rstrip(".") or "0"


def render_svg_string(
    g: GeometricGraph,
    overlays: Sequence = (),
    marks: Optional[Mapping[str, int]] = None,
    size: float = 800.0,
) -> str:
    """Light edges, heavy overlay polylines, labelled marked vertices.

    The y axis is flipped so the picture reads like a plot.  Overlays are
    PathTraces or plain vertex sequences.
    """
    if g.n == 0:
        raise ValueError("cannot render an empty graph")
    xs = [p.x for p in g.points]
    ys = [-p.y for p in g.points]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    w, h = x1 - x0, y1 - y0
    span = max(w, h) or 1.0
    w, h = w or span, h or span
    mx, my = MARGIN * w, MARGIN * h
    vb = (x0 - mx, y0 - my, w + 2 * mx, h + 2 * my)
    stroke = span / 500.0
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_num(size)}" '
        f'height="{_num(size * vb[3] / vb[2])}" viewBox="{" ".join(_num(v) for v in vb)}">',
        f'<g stroke="#9a9a9a" stroke-width="{_num(stroke)}" fill="none">',
    ]
    for u, v in g.edges():
        out.append(f'<line x1="{_num(xs[u])}" y1="{_num(ys[u])}" x2="{_num(xs[v])}" y2="{_num(ys[v])}"/>')
    out.append("</g>")
    for k, ov in enumerate(overlays):
        vs = ov.vertices if isinstance(ov, PathTrace) else tuple(ov)
        pts = " ".join(f"{_num(xs[v])},{_num(ys[v])}" for v in vs)
        color = OVERLAY_COLORS[k % len(OVERLAY_COLORS)]
        out.append(
            f'<polyline class="overlay-{k}" points="{pts}" fill="none" stroke="{color}" '
            f'stroke-width="{_num(4 * stroke)}" stroke-opacity="0.8"/>'
        )
    if marks:
        r = 3 * stroke
        font = 12 * stroke
        out.append(f'<g font-family="sans-serif" font-size="{_num(font)}">')
        for name, v in sorted(marks.items(), key=lambda kv: (kv[1], kv[0])):
            out.append(f'<circle cx="{_num(xs[v])}" cy="{_num(ys[v])}" r="{_num(r)}" fill="black"/>')
            out.append(
                f'<text x="{_num(xs[v] + 1.5 * r)}" y="{_num(ys[v] - 1.5 * r)}" '
                f"data-vertex={quoteattr(str(v))}>{escape(str(name))}</text>"
            )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(g: GeometricGraph, overlays: Sequence = (), out=None, marks=None, size: float = 800.0) -> str:
    """Render and optionally write to out (a path or a text stream); returns the SVG text."""
    text = render_svg_string(g, overlays, marks, size)
    if out is not None:
        if hasattr(out, "write"):
            out.write(text)
        else:
            with open(out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
    return text
