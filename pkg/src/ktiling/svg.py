"""Standalone SVG 1.1 pictures of P + X.

Coordinates are converted to decimal only here, with 15 significant digits.
In coverage-heat mode each arrangement trapezoid is filled with
``PALETTE[multiplicity % 8]``.
"""

from __future__ import annotations

from fractions import Fraction

from .arrangement import build_arrangement
from .geometry import CSPolygon
from .kernels import IntegerFrame
from .lattice import BBox, TranslateMultiset, enumerate_translates

PALETTE = (
    "#4e79a7",
    "#f28e2b",
    "#e15759",
    "#76b7b2",
    "#59a14f",
    "#edc948",
    "#b07aa1",
    "#ff9da7",
)

STYLES = ("outlines", "coverage-heat")


def _num(q) -> str:
    s = format(float(q) + 0.0, ".15g")
    return "0" if s == "-0" else s


def _pts(points) -> str:
    return " ".join(f"{_num(p[0])},{_num(-p[1])}" for p in points)


def render_svg(P: CSPolygon, X: TranslateMultiset, window: BBox, style: str = "outlines") -> str:
    if style not in STYLES:
        raise ValueError(f"style must be one of {STYLES}")
    w = window.xmax - window.xmin
    h = window.ymax - window.ymin
    stroke = _num(max(w, h) / 400)
    px_w = 600
    px_h = max(1, round(600 * h / w)) if w else 600
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{px_w}" height="{px_h}" '
        f'viewBox="{_num(window.xmin)} {_num(-window.ymax)} {_num(w)} {_num(h)}">',
    ]
    translates = enumerate_translates(P, X, window)
    legend: list[int] = []
    if style == "coverage-heat":
        segs = [e.translated(t) for t in translates for e in P.edges()]
        arr = build_arrangement(segs, window)
        frame = IntegerFrame(P.vertices, translates)
        samples = [t.sample for t in arr.trapezoids]
        mults, _ = frame.count(samples)
        out.append('<g stroke-linejoin="round">')
        for trap, mult in zip(arr.trapezoids, mults):
            color = PALETTE[mult % len(PALETTE)]
            out.append(
                f'<polygon points="{_pts(trap.corners())}" fill="{color}" stroke="{color}" '
                f'stroke-width="{stroke}"/>'
            )
        out.append("</g>")
        legend = sorted(set(mults))
    out.append(f'<g fill="none" stroke="#000000" stroke-width="{stroke}" stroke-opacity="0.8">')
    for t in translates:
        out.append(f'<polygon points="{_pts(v + t for v in P.vertices)}"/>')
    out.append("</g>")
    if legend:
        size = max(w, h) / 25
        out.append(f'<g font-family="sans-serif" font-size="{_num(size)}">')
        for i, mult in enumerate(legend):
            x = window.xmin + size / 2
            y = -window.ymax + size / 2 + i * size * Fraction(3, 2)
            out.append(
                f'<rect x="{_num(x)}" y="{_num(y)}" width="{_num(size)}" height="{_num(size)}" '
                f'fill="{PALETTE[mult % len(PALETTE)]}" stroke="#000000" stroke-width="{stroke}"/>'
            )
            out.append(f'<text x="{_num(x + size * Fraction(3, 2))}" y="{_num(y + size * Fraction(4, 5))}">{mult}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
