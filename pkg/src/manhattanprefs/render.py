"""Static SVG figures of 2D embeddings with Manhattan circles.

A Manhattan circle of radius r around a point is the square with vertices
at distance r along the four axis directions (a square rotated 45 degrees
to the axes).  Vertex coordinates are computed exactly and rounded only
when serialized, at a fixed six decimals; element order is fixed, so
identical figure specs yield byte-identical documents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .geometry import Embedding, manhattan

PALETTE = (
    "#1b6ca8",
    "#c0392b",
    "#1e8449",
    "#8e44ad",
    "#d68910",
    "#16a085",
    "#7f8c8d",
    "#2c3e50",
)


class RenderError(ValueError):
    pass


@dataclass(frozen=True)
class FigureSpec:
    """What to draw: a 2D embedding plus circle families per voter.

    `circle_voters` lists 1-based voter indices whose distance circles to
    every alternative are drawn.  `unit` is the pixel size of one
    coordinate unit; `pad` is the margin around the content, in units.
    """

    embedding: Embedding
    circle_voters: tuple[int, ...] = ()
    unit: int = 24
    pad: int = 1
    labels: bool = True

    def __post_init__(self) -> None:
        if self.embedding.dimension != 2:
            raise RenderError("only 2D embeddings can be rendered")
        for v in self.circle_voters:
            if not 1 <= v <= self.embedding.n:
                raise RenderError(f"circle voter {v} out of range")


def _fmt(x: Fraction | float) -> str:
    return f"{float(x):.6f}"


def voter_color(i: int) -> str:
    return PALETTE[(i - 1) % len(PALETTE)]


def render_embedding(spec: FigureSpec) -> str:
    """Render the figure as an SVG document string."""
    e = spec.embedding
    radii: list[tuple[int, int, Fraction]] = []
    for i in spec.circle_voters:
        for j in range(1, e.m + 1):
            radii.append((i, j, manhattan(e.voter_point(i), e.alt_point(j))))

    xs = [pt[0] for pt in e.voters + e.alts]
    ys = [pt[1] for pt in e.voters + e.alts]
    for i, _, r in radii:
        v = e.voter_point(i)
        xs.extend((v[0] - r, v[0] + r))
        ys.extend((v[1] - r, v[1] + r))
    min_x = math.floor(min(xs)) - spec.pad
    max_x = math.ceil(max(xs)) + spec.pad
    min_y = math.floor(min(ys)) - spec.pad
    max_y = math.ceil(max(ys)) + spec.pad
    width = (max_x - min_x) * spec.unit
    height = (max_y - min_y) * spec.unit

    def sx(x: Fraction | int) -> str:
        return _fmt((Fraction(x) - min_x) * spec.unit)

    def sy(y: Fraction | int) -> str:
        return _fmt((Fraction(max_y) - Fraction(y)) * spec.unit)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    for gx in range(min_x, max_x + 1):
        out.append(
            f'<line x1="{sx(gx)}" y1="{sy(min_y)}" x2="{sx(gx)}" y2="{sy(max_y)}" '
            f'stroke="#e6e6e6" stroke-width="1"/>'
        )
    for gy in range(min_y, max_y + 1):
        out.append(
            f'<line x1="{sx(min_x)}" y1="{sy(gy)}" x2="{sx(max_x)}" y2="{sy(gy)}" '
            f'stroke="#e6e6e6" stroke-width="1"/>'
        )
    if min_x <= 0 <= max_x:
        out.append(
            f'<line x1="{sx(0)}" y1="{sy(min_y)}" x2="{sx(0)}" y2="{sy(max_y)}" '
            f'stroke="#999999" stroke-width="2"/>'
        )
    if min_y <= 0 <= max_y:
        out.append(
            f'<line x1="{sx(min_x)}" y1="{sy(0)}" x2="{sx(max_x)}" y2="{sy(0)}" '
            f'stroke="#999999" stroke-width="2"/>'
        )

    for i, j, r in radii:
        v = e.voter_point(i)
        color = voter_color(i)
        if r == 0:
            out.append(
                f'<circle cx="{sx(v[0])}" cy="{sy(v[1])}" r="3" fill="{color}" '
                f'data-role="degenerate-circle" data-voter="{i}" data-alt="{j}"/>'
            )
            continue
        pts = (
            (v[0] + r, v[1]),
            (v[0], v[1] + r),
            (v[0] - r, v[1]),
            (v[0], v[1] - r),
        )
        path = " ".join(f"{sx(px)},{sy(py)}" for px, py in pts)
        out.append(
            f'<polygon points="{path}" fill="none" stroke="{color}" '
            f'stroke-width="1.5" data-role="circle" data-voter="{i}" data-alt="{j}"/>'
        )

    for j in range(1, e.m + 1):
        a = e.alt_point(j)
        half = 5
        out.append(
            f'<rect x="{_fmt((Fraction(a[0]) - min_x) * spec.unit - half)}" '
            f'y="{_fmt((Fraction(max_y) - Fraction(a[1])) * spec.unit - half)}" '
            f'width="10" height="10" fill="#d62728" data-role="alternative" data-alt="{j}"/>'
        )
        if spec.labels:
            out.append(
                f'<text x="{_fmt((Fraction(a[0]) - min_x) * spec.unit + 7)}" '
                f'y="{_fmt((Fraction(max_y) - Fraction(a[1])) * spec.unit - 7)}" '
                f'font-family="sans-serif" font-size="12" fill="#d62728">{j}</text>'
            )
    for i in range(1, e.n + 1):
        v = e.voter_point(i)
        color = voter_color(i)
        out.append(
            f'<circle cx="{sx(v[0])}" cy="{sy(v[1])}" r="5" fill="{color}" '
            f'data-role="voter" data-voter="{i}"/>'
        )
        if spec.labels:
            out.append(
                f'<text x="{_fmt((Fraction(v[0]) - min_x) * spec.unit + 7)}" '
                f'y="{_fmt((Fraction(max_y) - Fraction(v[1])) * spec.unit + 14)}" '
                f'font-family="sans-serif" font-size="12" fill="{color}">v{i}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
