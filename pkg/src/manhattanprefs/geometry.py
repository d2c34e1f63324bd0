"""Exact rational points, L1/L2 distances, boxes, quadrants, and the
embedding verifier.

All arithmetic is over :class:`fractions.Fraction`; there is no epsilon
anywhere.  Strict preference requires strictly smaller distance, so tied
distances are reported as violations rather than perturbed away.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .profiles import PreferenceProfile

Point = tuple[Fraction, ...]

_Coord = "Fraction | int | str"


class GeometryError(ValueError):
    """Dimension mismatches and malformed embedding data."""


def point(*coords) -> Point:
    """Build an exact point from ints, Fractions, or 'p/q' strings."""
    return tuple(Fraction(c) for c in coords)


def _check_dims(p: Sequence, q: Sequence) -> None:
    if len(p) != len(q):
        raise GeometryError(f"dimension mismatch: {len(p)} vs {len(q)}")


def manhattan(p: Sequence, q: Sequence) -> Fraction:
    """Exact L1 distance."""
    _check_dims(p, q)
    return sum((abs(Fraction(a) - Fraction(b)) for a, b in zip(p, q)), Fraction(0))


def euclidean_sq(p: Sequence, q: Sequence) -> Fraction:
    """Exact squared L2 distance (squares keep comparisons rational)."""
    _check_dims(p, q)
    return sum(((Fraction(a) - Fraction(b)) ** 2 for a, b in zip(p, q)), Fraction(0))


def bounding_box_contains(corner1: Sequence, corner2: Sequence, x: Sequence) -> bool:
    """Closed-box membership: min(c1,c2) <= x <= max(c1,c2) on every axis."""
    _check_dims(corner1, corner2)
    _check_dims(corner1, x)
    for a, b, v in zip(corner1, corner2, x):
        lo, hi = (a, b) if a <= b else (b, a)
        if not lo <= v <= hi:
            return False
    return True


class Quadrant(enum.Enum):
    NE = "NE"
    SE = "SE"
    NW = "NW"
    SW = "SW"


# Per-axis comparison directions: +1 means x[axis] >= anchor[axis].
_QUADRANT_SIGNS = {
    Quadrant.NE: (1, 1),
    Quadrant.SE: (1, -1),
    Quadrant.NW: (-1, 1),
    Quadrant.SW: (-1, -1),
}


def quadrant_contains(anchor: Sequence, quad: Quadrant, x: Sequence) -> bool:
    """Closed-quadrant membership in the plane (anchor lies in all four)."""
    if len(anchor) != 2 or len(x) != 2:
        raise GeometryError("quadrants are defined only in dimension 2")
    sx, sy = _QUADRANT_SIGNS[quad]
    return sx * (x[0] - anchor[0]) >= 0 and sy * (x[1] - anchor[1]) >= 0


@dataclass(frozen=True)
class Embedding:
    """Placement of n voters and m alternatives in d-dimensional space."""

    dimension: int
    voters: tuple[Point, ...]
    alts: tuple[Point, ...]

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise GeometryError("dimension must be at least 1")
        for pt in self.voters + self.alts:
            if len(pt) != self.dimension:
                raise GeometryError("all points must share the embedding dimension")

    @property
    def n(self) -> int:
        return len(self.voters)

    @property
    def m(self) -> int:
        return len(self.alts)

    def voter_point(self, i: int) -> Point:
        return self.voters[i - 1]

    def alt_point(self, j: int) -> Point:
        return self.alts[j - 1]


@dataclass(frozen=True)
class Violation:
    """A voter whose preferred alternative is not strictly closer."""

    voter: int
    preferred: int
    other: int


def verify_embedding(
    p: PreferenceProfile, e: Embedding, metric: str = "l1"
) -> Violation | None:
    """Check whether `e` realizes `p` under the chosen metric.

    Returns None when consistent.  Otherwise returns the first violated
    rank-adjacent pair in (voter, rank) scan order; adjacent pairs suffice
    because strict < is transitive, and a reported pair is itself violated.
    Ties count as violations.
    """
    if e.n != p.n or e.m != p.m:
        raise GeometryError(
            f"embedding covers {e.n} voters / {e.m} alternatives, "
            f"profile has {p.n} / {p.m}"
        )
    if metric == "l1":
        dist = manhattan
    elif metric == "l2":
        dist = euclidean_sq
    else:
        raise GeometryError(f"unknown metric {metric!r}")
    for i in range(1, p.n + 1):
        v = e.voter_point(i)
        order = p.orders[i - 1]
        prev_alt = order[0]
        prev_dist = dist(v, e.alt_point(prev_alt))
        for alt in order[1:]:
            d = dist(v, e.alt_point(alt))
            if not prev_dist < d:
                return Violation(voter=i, preferred=prev_alt, other=alt)
            prev_alt, prev_dist = alt, d
    return None


def parse_embedding(text: str) -> Embedding:
    """Parse the embedding format: header "d n m", then n voter lines and m
    alternative lines, each d rationals written 'p/q' or as integers."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GeometryError("empty input")
    head = lines[0].split()
    if len(head) != 3:
        raise GeometryError("malformed header: expected 'd n m'")
    try:
        d, n, m = (int(tok) for tok in head)
    except ValueError:
        raise GeometryError("malformed header: expected three integers") from None
    if d < 1 or n < 1 or m < 1:
        raise GeometryError("header counts must be positive")
    if len(lines) - 1 < n + m:
        raise GeometryError(f"expected {n + m} point rows, found {len(lines) - 1}")
    pts = []
    for row_no, line in enumerate(lines[1 : 1 + n + m], start=1):
        toks = line.split()
        if len(toks) != d:
            raise GeometryError(f"point row {row_no}: expected {d} coordinates")
        try:
            pts.append(tuple(Fraction(tok) for tok in toks))
        except (ValueError, ZeroDivisionError):
            raise GeometryError(f"point row {row_no}: bad rational") from None
    return Embedding(d, tuple(pts[:n]), tuple(pts[n:]))


def serialize_embedding(e: Embedding) -> str:
    lines = [f"{e.dimension} {e.n} {e.m}"]
    for pt in e.voters + e.alts:
        lines.append(" ".join(str(c) for c in pt))
    return "\n".join(lines) + "\n"
