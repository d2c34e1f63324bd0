"""Constructive embeddings: n-dimensional for any profile, and
(m-1)-dimensional for profiles with m alternatives.

Both constructions place points on integer coordinates and make every
voter-to-alternative distance linear in the voter's rank of that
alternative, which forces the strict distance ordering.
"""

from __future__ import annotations

from fractions import Fraction

from .geometry import Embedding
from .profiles import PreferenceProfile, max_rank_info


def embed_n_dim(p: PreferenceProfile, offset: int | None = None) -> Embedding:
    """Embed `p` into n dimensions, one axis per voter.

    Voter i sits at -m on axis i and 0 elsewhere.  Alternative j gets, on
    each axis z, its rank deficit rk_z(j) - mk_j, except on the axis of the
    smallest-index voter attaining the maximum rank mk_j, where it gets
    offset + 2*rk_z(j) + sum_k (rk_k(j) - mk_j).  With offset >= n*m every
    distance comes out to exactly m + offset + 2*rk_i(j).
    """
    n, m = p.n, p.m
    off = n * m if offset is None else offset
    if off < n * m:
        raise ValueError(f"offset must be at least n*m = {n * m}, got {off}")
    voters = tuple(
        tuple(Fraction(-m) if z == i else Fraction(0) for z in range(1, n + 1))
        for i in range(1, n + 1)
    )
    alts = []
    for j in range(1, m + 1):
        mk, attaining = max_rank_info(p, j)
        slack = sum(p.rank(k, j) - mk for k in range(1, n + 1))
        coords = []
        for z in range(1, n + 1):
            if z != attaining:
                coords.append(Fraction(p.rank(z, j) - mk))
            else:
                coords.append(Fraction(off + 2 * p.rank(z, j) + slack))
        alts.append(tuple(coords))
    return Embedding(n, voters, tuple(alts))


def n_dim_distance(p: PreferenceProfile, voter: int, alt: int, offset: int | None = None) -> Fraction:
    """The distance the n-dimensional construction guarantees:
    m + offset + 2*rk_voter(alt)."""
    off = p.n * p.m if offset is None else offset
    return Fraction(p.m + off + 2 * p.rank(voter, alt))


def embed_m_dim(p: PreferenceProfile, origin_alt: int | None = None) -> Embedding:
    """Embed `p` into m-1 dimensions, one axis per non-origin alternative.

    One designated alternative (by default the highest-numbered) sits at
    the origin; with k = m-1, every other alternative sits at 2k on its own
    axis.  Voter i's coordinate on the axis of alternative j is
    2k - rk_i(j) when i ranks j above the origin alternative and k - rk_i(j)
    otherwise, which makes the distance to j equal to
    |voter|_1 + 2*(k - coordinate).
    """
    m = p.m
    if m < 2:
        raise ValueError("need at least two alternatives")
    origin = m if origin_alt is None else origin_alt
    p._check_alt(origin)
    others = [a for a in range(1, m + 1) if a != origin]
    k = m - 1
    alt_points: dict[int, tuple[Fraction, ...]] = {
        origin: tuple(Fraction(0) for _ in range(k))
    }
    for axis, j in enumerate(others):
        alt_points[j] = tuple(
            Fraction(2 * k) if z == axis else Fraction(0) for z in range(k)
        )
    voters = []
    for i in range(1, p.n + 1):
        origin_rank = p.rank(i, origin)
        coords = []
        for j in others:
            r = p.rank(i, j)
            coords.append(Fraction(2 * k - r if r < origin_rank else k - r))
        voters.append(tuple(coords))
    alts = tuple(alt_points[j] for j in range(1, m + 1))
    return Embedding(k, tuple(voters), alts)


def m_dim_distance(
    p: PreferenceProfile, e: Embedding, voter: int, alt: int, origin_alt: int | None = None
) -> Fraction:
    """The distance identity of the (m-1)-dimensional construction:
    |voter|_1 for the origin alternative, else |voter|_1 + 2*(k - coord)."""
    origin = p.m if origin_alt is None else origin_alt
    v = e.voter_point(voter)
    base = sum((abs(c) for c in v), Fraction(0))
    if alt == origin:
        return base
    others = [a for a in range(1, p.m + 1) if a != origin]
    axis = others.index(alt)
    return base + 2 * (Fraction(p.m - 1) - v[axis])
