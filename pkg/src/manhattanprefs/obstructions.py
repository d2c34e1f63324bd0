"""Forbidden three-voter configurations and quadrant-based necessary
conditions for two-dimensional Manhattan embeddings.

The "inside" pattern: voter v disagrees with u and w about two
alternatives around a middle one, which rules out placing v inside the
bounding box of u and w.  The "staircase" pattern adds side conditions
that rule out the outside placement.  When every voter of a triple is
blocked in both roles, no placement of the three voters works at all, so
the subprofile has no 2D Manhattan embedding.  This test is sound but not
complete: an inconclusive answer says nothing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import (
    Embedding,
    Quadrant,
    bounding_box_contains,
    quadrant_contains,
)
from .profiles import PreferenceProfile


@dataclass(frozen=True)
class BECertificate:
    """Witness of the inside-blocking pattern for voters (v, u, w).

    alts = (a, b, x): v ranks a > x > b while u and w both rank b > x > a.
    """

    voters: tuple[int, int, int]
    alts: tuple[int, int, int]


@dataclass(frozen=True)
class EXCertificate:
    """Witness of the outside-blocking pattern for voters (v, u, w).

    alts = (x, a, b, c, d, e), where c, d, e need not be distinct:
    u: a > x > b with c > x and d > x; v: a, b > x and x > d, e;
    w: b > x > a with c > x and e > x.
    """

    voters: tuple[int, int, int]
    alts: tuple[int, int, int, int, int, int]


def _check_triple(p: PreferenceProfile, v: int, u: int, w: int) -> None:
    for voter in (v, u, w):
        p._check_voter(voter)
    if len({v, u, w}) != 3:
        raise ValueError("voter indices must be distinct")


def find_be(p: PreferenceProfile, v: int, u: int, w: int) -> BECertificate | None:
    """First (a, b, x) triple, in lexicographic order, where v ranks
    a > x > b and both u and w rank b > x > a."""
    _check_triple(p, v, u, w)
    alts = range(1, p.m + 1)
    for a in alts:
        for b in alts:
            if b == a:
                continue
            for x in alts:
                if x == a or x == b:
                    continue
                if (
                    p.prefers(v, a, x)
                    and p.prefers(v, x, b)
                    and p.prefers(u, b, x)
                    and p.prefers(u, x, a)
                    and p.prefers(w, b, x)
                    and p.prefers(w, x, a)
                ):
                    return BECertificate((v, u, w), (a, b, x))
    return None


def find_ex(p: PreferenceProfile, v: int, u: int, w: int) -> EXCertificate | None:
    """First (x, a, b, c, d, e) tuple, in lexicographic order, satisfying
    the staircase pattern; c, d, e are drawn with repetition."""
    _check_triple(p, v, u, w)
    alts = range(1, p.m + 1)
    for x in alts:
        # Candidates for the side alternatives only depend on x.
        above_u = [c for c in alts if p.prefers(u, c, x)]
        above_w = [c for c in alts if p.prefers(w, c, x)]
        below_v = [c for c in alts if p.prefers(v, x, c)]
        c_opts = [c for c in above_u if c in above_w]
        d_opts = [c for c in above_u if c in below_v]
        e_opts = [c for c in above_w if c in below_v]
        if not (c_opts and d_opts and e_opts):
            continue
        c, d, e = c_opts[0], d_opts[0], e_opts[0]
        for a in alts:
            if a == x:
                continue
            if not (
                p.prefers(u, a, x) and p.prefers(v, a, x) and p.prefers(w, x, a)
            ):
                continue
            for b in alts:
                if b == x or b == a:
                    continue
                if (
                    p.prefers(u, x, b)
                    and p.prefers(v, b, x)
                    and p.prefers(w, b, x)
                ):
                    return EXCertificate((v, u, w), (x, a, b, c, d, e))
    return None


@dataclass(frozen=True)
class ThreeVoterVerdict:
    """Outcome of the triple test.

    An obstruction carries, for each voter of the triple in order, the pair
    of certificates blocking that voter's inside and outside placements.
    Inconclusive is NOT a feasibility claim.
    """

    obstruction: bool
    certificates: tuple[tuple[BECertificate, EXCertificate], ...] | None = None


def three_voter_obstruction(
    p: PreferenceProfile, triple: tuple[int, int, int]
) -> ThreeVoterVerdict:
    """Obstruction iff each voter of the triple admits both certificate
    kinds with itself in the middle role (other two voters in some order).

    Any placement of three points in the plane puts some point inside the
    others' bounding box or in the staircase position, so an obstruction
    implies the subprofile on these voters has no 2D Manhattan embedding.
    """
    v1, v2, v3 = triple
    _check_triple(p, v1, v2, v3)
    per_voter = []
    for v in triple:
        u, w = sorted(set(triple) - {v})
        # The inside pattern is symmetric in u and w; one order suffices.
        be = find_be(p, v, u, w)
        if be is None:
            return ThreeVoterVerdict(False)
        ex = find_ex(p, v, u, w) or find_ex(p, v, w, u)
        if ex is None:
            return ThreeVoterVerdict(False)
        per_voter.append((be, ex))
    return ThreeVoterVerdict(True, tuple(per_voter))


@dataclass(frozen=True)
class NecessaryViolation:
    """A violated necessary condition found by the diagnostic scan."""

    kind: str  # "box-shared-loser" | "box-corner" | "quadrant-sum"
    voters: tuple[int, ...]
    alts: tuple[int, int]
    quadrant: Quadrant | None = None


# Linear forms phi(q) such that y in Q(voter) and x preferred to y force
# phi(y) > phi(x); one per quadrant.
_QUADRANT_FORMS = {
    Quadrant.NE: lambda q: q[0] + q[1],
    Quadrant.NW: lambda q: -q[0] + q[1],
    Quadrant.SE: lambda q: q[0] - q[1],
    Quadrant.SW: lambda q: -q[0] - q[1],
}


def quadrant_necessary_violation(
    p: PreferenceProfile, e: Embedding
) -> NecessaryViolation | None:
    """Scan the box and quadrant conditions every consistent 2D embedding
    must satisfy; return the first violated instance or None.

    Three families, scanned in order: (1) an alternative both voters of a
    pair rank below some other alternative may not lie in the voters'
    bounding box; (2) when r prefers x to y and s prefers y to x, s may not
    lie in the box of r and x; (3) when an alternative y lies in a closed
    quadrant of a voter who prefers x to y, the quadrant's coordinate form
    must be strictly larger at y than at x.  This is a diagnostic: any
    embedding passing the verifier also passes this scan.
    """
    if e.dimension != 2:
        raise ValueError("necessary-condition scan is defined only in dimension 2")
    if e.n != p.n or e.m != p.m:
        raise ValueError("embedding does not cover the profile")
    for r in range(1, p.n + 1):
        for s in range(r + 1, p.n + 1):
            for x in range(1, p.m + 1):
                for y in range(1, p.m + 1):
                    if y == x:
                        continue
                    if p.prefers(r, y, x) and p.prefers(s, y, x):
                        if bounding_box_contains(
                            e.voter_point(r), e.voter_point(s), e.alt_point(x)
                        ):
                            return NecessaryViolation(
                                "box-shared-loser", (r, s), (x, y)
                            )
    for r in range(1, p.n + 1):
        for s in range(1, p.n + 1):
            if s == r:
                continue
            for x in range(1, p.m + 1):
                for y in range(1, p.m + 1):
                    if y == x:
                        continue
                    if p.prefers(r, x, y) and p.prefers(s, y, x):
                        if bounding_box_contains(
                            e.voter_point(r), e.alt_point(x), e.voter_point(s)
                        ):
                            return NecessaryViolation("box-corner", (r, s), (x, y))
    for s in range(1, p.n + 1):
        anchor = e.voter_point(s)
        for x in range(1, p.m + 1):
            for y in range(1, p.m + 1):
                if y == x or not p.prefers(s, x, y):
                    continue
                py, px = e.alt_point(y), e.alt_point(x)
                for quad in Quadrant:
                    if quadrant_contains(anchor, quad, py):
                        form = _QUADRANT_FORMS[quad]
                        if not form(py) > form(px):
                            return NecessaryViolation(
                                "quadrant-sum", (s,), (x, y), quad
                            )
    return None
