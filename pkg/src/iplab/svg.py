"""Arc diagrams: vertices on a line, edges as semicircles.

Odd colour classes are drawn above the line and even ones below, so a
2-partition renders as a two-page book embedding.
"""

from __future__ import annotations

from .core import OrderedGraph
from .noncross import EdgeColoring

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")
STEP = 30
MARGIN = 20


def arc_svg(G: OrderedGraph, c: EdgeColoring | None = None) -> str:
    width = 2 * MARGIN + STEP * max(G.n - 1, 0)
    reach = STEP * max(G.n - 1, 0) / 2
    base = MARGIN + reach
    height = 2 * MARGIN + 2 * reach

    def x(v: int) -> float:
        return MARGIN + STEP * (v - 1)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
        f'viewBox="0 0 {width:g} {height:g}">',
        f'<line x1="{x(1):g}" y1="{base:g}" x2="{x(G.n):g}" y2="{base:g}" stroke="#999"/>',
    ]
    for u, v in G.edges:
        col = 1 if c is None else c[(u, v)]
        r = (x(v) - x(u)) / 2
        sweep = 1 if col % 2 else 0
        stroke = "#000" if c is None else PALETTE[(col - 1) % len(PALETTE)]
        out.append(
            f'<path d="M {x(u):g} {base:g} A {r:g} {r:g} 0 0 {sweep} {x(v):g} {base:g}" '
            f'fill="none" stroke="{stroke}" data-edge="{u}-{v}" data-class="{col}"/>'
        )
    for v in range(1, G.n + 1):
        out.append(f'<circle cx="{x(v):g}" cy="{base:g}" r="3" data-vertex="{v}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
