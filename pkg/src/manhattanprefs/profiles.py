"""Preference profiles: parsing, ranks, subprofiles, and canonical enumeration.

A profile holds n strict rankings (one per voter) over the alternatives
1..m.  Ranks count strictly-preferred alternatives, so every voter's
favourite has rank 0 and their least-liked has rank m-1.  Tie-groups exist
only in :class:`ProfileSpec` patterns, which expand into sets of strict
profiles.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence


class ProfileError(ValueError):
    """Malformed profile data (bad header, non-permutation row, bad id)."""


@dataclass(frozen=True)
class PreferenceProfile:
    """n strict total orders over the alternatives 1..m.

    ``orders[i]`` lists voter i+1's alternatives from most- to
    least-preferred; each row must be a permutation of 1..m.  Instances are
    immutable and safe to share across workers.
    """

    m: int
    orders: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ProfileError("need at least one alternative")
        if len(self.orders) < 1:
            raise ProfileError("need at least one voter")
        expected = set(range(1, self.m + 1))
        ranks = []
        for row_no, order in enumerate(self.orders, start=1):
            if len(order) != self.m or set(order) != expected:
                raise ProfileError(f"row {row_no} is not a permutation of 1..{self.m}")
            by_alt = [0] * self.m
            for pos, alt in enumerate(order):
                by_alt[alt - 1] = pos
            ranks.append(tuple(by_alt))
        object.__setattr__(self, "_ranks", tuple(ranks))

    @property
    def n(self) -> int:
        return len(self.orders)

    def rank(self, voter: int, alt: int) -> int:
        """Number of alternatives `voter` strictly prefers to `alt` (0 = favourite)."""
        self._check_voter(voter)
        self._check_alt(alt)
        return self._ranks[voter - 1][alt - 1]

    def prefers(self, voter: int, a: int, b: int) -> bool:
        """True iff `voter` ranks alternative `a` strictly above `b`."""
        return self.rank(voter, a) < self.rank(voter, b)

    def _check_voter(self, voter: int) -> None:
        if not 1 <= voter <= self.n:
            raise ProfileError(f"voter index {voter} out of range 1..{self.n}")

    def _check_alt(self, alt: int) -> None:
        if not 1 <= alt <= self.m:
            raise ProfileError(f"alternative id {alt} out of range 1..{self.m}")


@dataclass(frozen=True)
class ProfileSpec:
    """A profile pattern whose rows may contain unordered tie-groups.

    Each row is a sequence of blocks; a block with more than one
    alternative stands for every possible strict order of its members.
    Blocks within a row must partition 1..m.
    """

    m: int
    rows: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ProfileError("need at least one alternative")
        expected = set(range(1, self.m + 1))
        for row_no, row in enumerate(self.rows, start=1):
            flat = [a for block in row for a in block]
            if len(flat) != self.m or set(flat) != expected:
                raise ProfileError(f"row {row_no} blocks do not partition 1..{self.m}")

    @property
    def n(self) -> int:
        return len(self.rows)

    def expansion_count(self) -> int:
        count = 1
        for row in self.rows:
            for block in row:
                count *= math.factorial(len(block))
        return count


def parse_profile(text: str) -> PreferenceProfile:
    """Parse the profile text format: a header line "n m", then n rows of
    m space-separated alternative ids (most- to least-preferred)."""
    header, lines = _split_header(text)
    n, m = header
    orders = []
    for row_no, line in enumerate(lines[:n], start=1):
        try:
            row = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise ProfileError(f"row {row_no}: non-integer token") from None
        for alt in row:
            if not 1 <= alt <= m:
                raise ProfileError(f"row {row_no}: alternative id {alt} out of range 1..{m}")
        if len(row) != m or len(set(row)) != m:
            raise ProfileError(f"row {row_no} is not a permutation of 1..{m}")
        orders.append(row)
    return PreferenceProfile(m, tuple(orders))


def serialize_profile(p: PreferenceProfile) -> str:
    lines = [f"{p.n} {p.m}"]
    lines.extend(" ".join(str(a) for a in order) for order in p.orders)
    return "\n".join(lines) + "\n"


def parse_spec(text: str) -> ProfileSpec:
    """Parse the spec text format: like a profile, but a tie-group is one
    token "{a,b,...}"."""
    header, lines = _split_header(text)
    n, m = header
    rows = []
    for row_no, line in enumerate(lines[:n], start=1):
        blocks = []
        for tok in line.split():
            if tok.startswith("{") and tok.endswith("}"):
                inner = tok[1:-1]
                try:
                    members = tuple(sorted(int(x) for x in inner.split(",") if x))
                except ValueError:
                    raise ProfileError(f"row {row_no}: bad tie-group {tok!r}") from None
                if not members:
                    raise ProfileError(f"row {row_no}: empty tie-group")
            else:
                try:
                    members = (int(tok),)
                except ValueError:
                    raise ProfileError(f"row {row_no}: non-integer token {tok!r}") from None
            for alt in members:
                if not 1 <= alt <= m:
                    raise ProfileError(f"row {row_no}: alternative id {alt} out of range 1..{m}")
            blocks.append(members)
        rows.append(tuple(blocks))
    return ProfileSpec(m, tuple(rows))


def serialize_spec(s: ProfileSpec) -> str:
    lines = [f"{s.n} {s.m}"]
    for row in s.rows:
        toks = []
        for block in row:
            if len(block) == 1:
                toks.append(str(block[0]))
            else:
                toks.append("{" + ",".join(str(a) for a in block) + "}")
        lines.append(" ".join(toks))
    return "\n".join(lines) + "\n"


def _split_header(text: str) -> tuple[tuple[int, int], list[str]]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ProfileError("empty input")
    head = lines[0].split()
    if len(head) != 2:
        raise ProfileError("malformed header: expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ProfileError("malformed header: expected two integers") from None
    if n < 1 or m < 1:
        raise ProfileError("header counts must be positive")
    if len(lines) - 1 < n:
        raise ProfileError(f"expected {n} ranking rows, found {len(lines) - 1}")
    return (n, m), lines[1:]


def max_rank_info(p: PreferenceProfile, alt: int) -> tuple[int, int]:
    """Maximum rank of `alt` over all voters, plus the smallest voter index
    attaining it."""
    p._check_alt(alt)
    best_rank = -1
    best_voter = 0
    for i in range(1, p.n + 1):
        r = p.rank(i, alt)
        if r > best_rank:
            best_rank = r
            best_voter = i
    return best_rank, best_voter


def restrict(
    p: PreferenceProfile, voters: Sequence[int], alts: Sequence[int]
) -> tuple[PreferenceProfile, tuple[int, ...]]:
    """Subprofile induced by the given voters and alternatives.

    Alternative ids are relabelled to the dense range 1..len(alts),
    preserving numeric order of the originals.  Returns the subprofile and
    the relabelling map: entry k-1 holds the original id of new id k.
    """
    voter_list = sorted(set(voters))
    alt_list = sorted(set(alts))
    if not voter_list or not alt_list:
        raise ProfileError("restriction needs at least one voter and one alternative")
    for v in voter_list:
        p._check_voter(v)
    for a in alt_list:
        p._check_alt(a)
    keep = set(alt_list)
    new_id = {old: new for new, old in enumerate(alt_list, start=1)}
    orders = tuple(
        tuple(new_id[a] for a in p.orders[v - 1] if a in keep) for v in voter_list
    )
    return PreferenceProfile(len(alt_list), orders), tuple(alt_list)


def expand_spec(s: ProfileSpec) -> list[PreferenceProfile]:
    """All strict profiles obtained by independently linearizing every
    tie-group, in a fixed deterministic order."""
    per_row = []
    for row in s.rows:
        block_perms = [list(itertools.permutations(block)) for block in row]
        linearizations = [
            tuple(itertools.chain.from_iterable(combo))
            for combo in itertools.product(*block_perms)
        ]
        per_row.append(linearizations)
    return [
        PreferenceProfile(s.m, combo) for combo in itertools.product(*per_row)
    ]


def count_canonical(n: int, m: int) -> int:
    """Number of canonical profiles: C(m!-1, n-1)."""
    return math.comb(math.factorial(m) - 1, n - 1)


def enumerate_canonical(n: int, m: int) -> Iterator[PreferenceProfile]:
    """Yield every profile whose first row is 1>2>...>m and whose remaining
    n-1 rows are distinct non-identity permutations.

    Permutations are indexed in lexicographic order and combinations are
    produced in ascending index order, so the stream is deterministic and
    an index range always selects the same profiles.
    """
    if n < 1 or m < 1:
        raise ProfileError("need n >= 1 and m >= 1")
    perms = list(itertools.permutations(range(1, m + 1)))
    identity = perms[0]
    for combo in itertools.combinations(perms[1:], n - 1):
        yield PreferenceProfile(m, (identity,) + combo)
