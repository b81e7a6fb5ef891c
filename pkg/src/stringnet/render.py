"""Deterministic SVG drawings of nets.

Geometry stays exact until the moment a number is written: every coordinate
is a Fraction mapped into pixel space and printed with six decimals, rounded
half-to-even.  The same net and options therefore always give the same bytes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .areas import envelope
from .net import Net, Point, intercepts

__all__ = ["RenderOptions", "DEFAULT_PALETTE", "ENVELOPE_SAMPLES", "render", "format_coord"]

log = logging.getLogger(__name__)

DEFAULT_PALETTE = ("#e9c46a", "#2a9d8f", "#f4a261", "#8ab17d", "#e76f51", "#6d8ead")
ENVELOPE_SAMPLES = 256
_MARGIN = Fraction(1, 20)
_SCALE_6DP = 10**6


@dataclass(frozen=True)
class RenderOptions:
    width_px: int = 1000
    checkered: bool = False
    show_envelope: bool = False
    show_vertices: bool = False
    palette: tuple[str, ...] = DEFAULT_PALETTE
    boundary_color: str = "#264653"
    line_color: str = "#1d1d1d"
    line_width: float = 1.5
    envelope_color: str = "#c1121f"
    envelope_width: float = 2.0
    vertex_color: str = "#1d1d1d"
    vertex_radius: float = 2.5

    def __post_init__(self) -> None:
        if self.width_px < 100:
            raise ValueError("width_px must be at least 100")
        if self.checkered and not self.palette:
            raise ValueError("checkered rendering needs a non-empty palette")
        object.__setattr__(self, "palette", tuple(self.palette))


def format_coord(v: Fraction | float | int) -> str:
    """Six decimals, exact round-half-even (``Fraction.__round__``)."""
    units = round(Fraction(v) * _SCALE_6DP)
    sign = "-" if units < 0 else ""
    whole, frac = divmod(abs(units), _SCALE_6DP)
    return f"{sign}{whole}.{frac:06d}"


class _Viewport:
    """Math plane (y up) to SVG pixels (y down) over a padded bounding box."""

    def __init__(self, net: Net, width_px: int) -> None:
        pts = self._extent_points(net)
        xs = [p.x for p in pts]
        ys = [p.y for p in pts]
        self.x0, self.y0 = min(xs), min(ys)
        bw, bh = max(xs) - self.x0, max(ys) - self.y0
        self.pad = _MARGIN * max(bw, bh, Fraction(1, 10**6))
        self.scale = Fraction(width_px) / (bw + 2 * self.pad)
        self.width = Fraction(width_px)
        self.height = (bh + 2 * self.pad) * self.scale

    @staticmethod
    def _extent_points(net: Net) -> list[Point]:
        cfg = net.config
        pts = [Point(Fraction(0), Fraction(0))]
        for i in range(cfg.n + 1):
            pts.extend(intercepts(cfg, i))
        if cfg.n >= 1:
            # off-diagonal only: the lattice diagonal holds no vertex
            iu = np.triu_indices(cfg.n + 1, k=1)
            d = net.denominator
            xv, yv = net.xnum[iu], net.ynum[iu]
            pts.append(Point(Fraction(int(xv.min()), d), Fraction(int(yv.min()), d)))
            pts.append(Point(Fraction(int(xv.max()), d), Fraction(int(yv.max()), d)))
        return pts

    def map(self, p: Point) -> tuple[str, str]:
        sx = (p.x - self.x0 + self.pad) * self.scale
        sy = self.height - (p.y - self.y0 + self.pad) * self.scale
        return format_coord(sx), format_coord(sy)

    def points_attr(self, pts) -> str:
        return " ".join(",".join(self.map(p)) for p in pts)


def render(net: Net, options: RenderOptions | None = None) -> bytes:
    """SVG 1.1 document for ``net``.

    Order: quadrilaterals by ``(i, j)``, boundary triangles by ``i``, lines
    ``l_0 .. l_N``, envelope, vertices by ``(i, j)``.
    """
    opt = options or RenderOptions()
    cfg = net.config
    n = net.n
    vp = _Viewport(net, opt.width_px)
    w, h = format_coord(vp.width), format_coord(vp.height)
    P = net.vertex
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f'<rect x="0.000000" y="0.000000" width="{w}" height="{h}" fill="#ffffff"/>',
    ]

    if opt.checkered:
        out.append('<g id="quadrilaterals" stroke="none">')
        for i in range(n - 2):
            for j in range(i + 2, n):
                color = opt.palette[(j - i) % len(opt.palette)]
                corners = (P(i, j), P(i + 1, j), P(i + 1, j + 1), P(i, j + 1))
                out.append(
                    f'<polygon class="quad" data-i="{i}" data-j="{j}" '
                    f'points="{vp.points_attr(corners)}" fill="{color}"/>'
                )
        out.append("</g>")
        out.append(f'<g id="boundary-triangles" stroke="none" fill="{opt.boundary_color}">')
        for i in range(n - 1):
            corners = (P(i, i + 1), P(i, i + 2), P(i + 1, i + 2))
            out.append(f'<polygon class="boundary" data-i="{i}" points="{vp.points_attr(corners)}"/>')
        out.append("</g>")

    lw = format_coord(opt.line_width)
    out.append(f'<g id="lines" stroke="{opt.line_color}" stroke-width="{lw}" stroke-linecap="round">')
    for i in range(n + 1):
        X, Y = intercepts(cfg, i)
        (x1, y1), (x2, y2) = vp.map(X), vp.map(Y)
        out.append(f'<line data-i="{i}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("</g>")

    if opt.show_envelope:
        if cfg.is_right and cfg.is_equidistant:
            samples = []
            for k in range(ENVELOPE_SAMPLES):
                x = k / (ENVELOPE_SAMPLES - 1)
                samples.append(Point(Fraction(x), Fraction(envelope(x))))
            out.append(
                f'<polyline id="envelope" fill="none" stroke="{opt.envelope_color}" '
                f'stroke-width="{format_coord(opt.envelope_width)}" points="{vp.points_attr(samples)}"/>'
            )
        else:
            log.warning("envelope overlay is only defined for right-framed equidistant nets; skipped")

    if opt.show_vertices:
        r = format_coord(opt.vertex_radius)
        out.append(f'<g id="vertices" fill="{opt.vertex_color}">')
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                cx, cy = vp.map(P(i, j))
                out.append(f'<circle data-i="{i}" data-j="{j}" cx="{cx}" cy="{cy}" r="{r}"/>')
        out.append("</g>")

    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")
