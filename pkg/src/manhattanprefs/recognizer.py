"""Exact decision procedure for two-dimensional Manhattan realizability.

The search fixes, per (voter, alternative, axis), the sign of the
coordinate difference; a full assignment turns every absolute value into a
linear expression, so realizability becomes rational LP feasibility.
Branch-and-bound explores the sign tree depth-first with LP relaxation
pruning.  Distances on the preferred side of a comparison are bounded
above by fresh surrogate variables, which is exact at feasibility; the
less-preferred side of a comparison is emitted only once its signs are
decided.

A fast floating-point LP screens each relaxation first, but every decision
that affects the verdict is confirmed with the exact rational solver:
subtrees are pruned only on an exact infeasibility certificate, and every
returned witness is re-verified against the profile.  Strict preference is
encoded as a unit margin, valid because the whole constraint system is
invariant under uniform positive scaling.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Mapping

import numpy as np
from scipy.optimize import linprog

from .geometry import Embedding, verify_embedding
from .lp import EQ, GE, FeasibilityResult, LinearConstraint, LinearSystem, solve_feasibility
from .obstructions import ThreeVoterVerdict, three_voter_obstruction
from .profiles import PreferenceProfile

NONNEG = 1
NONPOS = -1

SignKey = tuple[int, int, int]  # (voter, alternative, axis) with axis in (1, 2)

_ZERO = Fraction(0)
_ONE = Fraction(1)


class RecognizerError(ValueError):
    pass


class InternalVerificationError(RuntimeError):
    """A witness produced by the search failed re-verification."""


@dataclass(frozen=True)
class SignAssignment:
    """Per-(voter, alternative, axis) sign of E(v_i)[k] - E(a_j)[k].

    Keys absent from `signs` are undecided.  Values are NONNEG (+1) or
    NONPOS (-1).
    """

    signs: Mapping[SignKey, int]

    def get(self, voter: int, alt: int, axis: int) -> int | None:
        return self.signs.get((voter, alt, axis))

    @staticmethod
    def from_embedding(p: PreferenceProfile, e: Embedding) -> "SignAssignment":
        """Read a full sign pattern off a known 2D embedding; zero
        differences are recorded as NONNEG."""
        signs: dict[SignKey, int] = {}
        for i in range(1, p.n + 1):
            v = e.voter_point(i)
            for j in range(1, p.m + 1):
                a = e.alt_point(j)
                for k in (1, 2):
                    signs[(i, j, k)] = NONNEG if v[k - 1] >= a[k - 1] else NONPOS
        return SignAssignment(signs)


@dataclass(frozen=True)
class RecognitionOutcome:
    verdict: str  # "feasible" | "infeasible" | "undecided"
    witness: Embedding | None
    nodes: int
    prunes: int
    millis: float
    fast_certificate: ThreeVoterVerdict | None = None


def num_coordinate_vars(p: PreferenceProfile) -> int:
    return 2 * (p.n + p.m)


def voter_var(i: int, axis: int) -> int:
    return 2 * (i - 1) + (axis - 1)


def alt_var(p: PreferenceProfile, j: int, axis: int) -> int:
    return 2 * p.n + 2 * (j - 1) + (axis - 1)


def _octant_object_vars(p: PreferenceProfile) -> tuple[int, int]:
    """Variable indices (x, y) of the object pinned into the closed
    north-east octant: voter 2 when it exists, else alternative 1."""
    if p.n >= 2:
        return voter_var(2, 1), voter_var(2, 2)
    return alt_var(p, 1, 1), alt_var(p, 1, 2)


_SignItem = tuple[int, int, int, int]  # (voter, alt, axis, sign)


def _assemble(
    p: PreferenceProfile, signs: Mapping[SignKey, int], margin: Fraction
) -> tuple[LinearSystem, tuple[tuple[_SignItem, ...], ...]]:
    """Linearize the distance-order constraints under a (possibly partial)
    sign assignment.

    Emits, in order: anchors pinning voter 1 at the origin, the octant
    symmetry-break, one margin constraint per rank-adjacent pair whose
    less-preferred side is fully decided (undecided preferred-side axes go
    through surrogate variables), one consistency row per decided sign, and
    the surrogate bounding rows.

    Alongside the system, returns per-constraint dependency lists: the sign
    decisions each row's validity rests on.  Anchors, the octant rows, and
    surrogate bounds hold for every embedding, so their lists are empty.
    A Farkas certificate's combined dependencies therefore form a nogood:
    any assignment containing them is unrealizable.
    """
    n_coord = num_coordinate_vars(p)
    constraints: list[LinearConstraint] = []
    deps: list[tuple[_SignItem, ...]] = []
    constraints.append(LinearConstraint({voter_var(1, 1): _ONE}, EQ, _ZERO))
    constraints.append(LinearConstraint({voter_var(1, 2): _ONE}, EQ, _ZERO))
    ox, oy = _octant_object_vars(p)
    constraints.append(LinearConstraint({oy: _ONE}, GE, _ZERO))
    constraints.append(LinearConstraint({ox: _ONE, oy: -_ONE}, GE, _ZERO))
    deps.extend([()] * 4)

    surrogates: dict[SignKey, int] = {}
    next_var = n_coord
    margin_rows: list[tuple[dict[int, Fraction], tuple[_SignItem, ...]]] = []
    for i in range(1, p.n + 1):
        order = p.orders[i - 1]
        for pos in range(len(order) - 1):
            pref, other = order[pos], order[pos + 1]
            if any((i, other, k) not in signs for k in (1, 2)):
                continue
            coeffs: dict[int, Fraction] = {}
            row_deps: list[_SignItem] = []
            for k in (1, 2):
                sv = signs[(i, other, k)]
                row_deps.append((i, other, k, sv))
                sigma = Fraction(sv)
                _add(coeffs, voter_var(i, k), sigma)
                _add(coeffs, alt_var(p, other, k), -sigma)
            for k in (1, 2):
                decided = signs.get((i, pref, k))
                if decided is not None:
                    row_deps.append((i, pref, k, decided))
                    sigma = Fraction(decided)
                    _add(coeffs, voter_var(i, k), -sigma)
                    _add(coeffs, alt_var(p, pref, k), sigma)
                else:
                    key = (i, pref, k)
                    if key not in surrogates:
                        surrogates[key] = next_var
                        next_var += 1
                    _add(coeffs, surrogates[key], -_ONE)
            margin_rows.append((coeffs, tuple(row_deps)))
    for coeffs, row_deps in margin_rows:
        constraints.append(
            LinearConstraint({v: c for v, c in coeffs.items() if c}, GE, margin)
        )
        deps.append(row_deps)
    for (i, j, k), sigma in sorted(signs.items()):
        s = Fraction(sigma)
        constraints.append(
            LinearConstraint(
                {voter_var(i, k): s, alt_var(p, j, k): -s}, GE, _ZERO
            )
        )
        deps.append(((i, j, k, sigma),))
    for (i, j, k), t in sorted(surrogates.items(), key=lambda kv: kv[1]):
        vv, av = voter_var(i, k), alt_var(p, j, k)
        constraints.append(LinearConstraint({t: _ONE, vv: -_ONE, av: _ONE}, GE, _ZERO))
        constraints.append(LinearConstraint({t: _ONE, vv: _ONE, av: -_ONE}, GE, _ZERO))
        deps.extend([(), ()])
    return LinearSystem(next_var, tuple(constraints)), tuple(deps)


def _add(coeffs: dict[int, Fraction], var: int, value: Fraction) -> None:
    coeffs[var] = coeffs.get(var, _ZERO) + value


def build_system(
    p: PreferenceProfile, s: SignAssignment, margin: int = 1
) -> LinearSystem:
    """Full linearization for a completely decided sign assignment.

    Raises when a sign needed by some distance expression is undecided;
    partial assignments are a search-internal affair.
    """
    if p.m >= 2:
        for i in range(1, p.n + 1):
            for j in range(1, p.m + 1):
                for k in (1, 2):
                    if s.get(i, j, k) is None:
                        raise RecognizerError(
                            f"undecided sign for voter {i}, alternative {j}, axis {k}"
                        )
    system, _ = _assemble(p, s.signs, Fraction(margin))
    return system


def extract_witness(p: PreferenceProfile, result: FeasibilityResult) -> Embedding:
    """Integer-scaled embedding from a feasible leaf solve; re-verified."""
    if not result.feasible or result.witness is None:
        raise RecognizerError("extract_witness needs a feasible result")
    coords = result.witness[: num_coordinate_vars(p)]
    scale = lcm(*(c.denominator for c in coords)) if coords else 1
    scaled = [c * scale for c in coords]
    e = _embedding_from_values(p, scaled)
    if verify_embedding(p, e, "l1") is not None:
        raise InternalVerificationError(
            "leaf witness failed verification; linearization bug"
        )
    return e


def _embedding_from_values(p: PreferenceProfile, values) -> Embedding:
    voters = tuple(
        (Fraction(values[voter_var(i, 1)]), Fraction(values[voter_var(i, 2)]))
        for i in range(1, p.n + 1)
    )
    alts = tuple(
        (Fraction(values[alt_var(p, j, 1)]), Fraction(values[alt_var(p, j, 2)]))
        for j in range(1, p.m + 1)
    )
    return Embedding(2, voters, alts)


def _float_screen(system: LinearSystem) -> tuple[str, np.ndarray | None]:
    """Cheap floating-point feasibility hint: 'infeasible', 'feasible', or
    'unknown'.  Never trusted for verdicts, only for pruning candidates and
    branch ordering."""
    nv = system.num_vars
    a_ub, b_ub, a_eq, b_eq = [], [], [], []
    for con in system.constraints:
        row = np.zeros(nv)
        for v, c in con.coeffs.items():
            row[v] = float(c)
        if con.rel == GE:
            a_ub.append(-row)
            b_ub.append(-float(con.rhs))
        else:
            a_eq.append(row)
            b_eq.append(float(con.rhs))
    res = linprog(
        c=np.zeros(nv),
        A_ub=np.array(a_ub) if a_ub else None,
        b_ub=np.array(b_ub) if b_ub else None,
        A_eq=np.array(a_eq) if a_eq else None,
        b_eq=np.array(b_eq) if b_eq else None,
        bounds=(None, None),
        method="highs",
    )
    if res.status == 2:
        return "infeasible", None
    if res.status == 0:
        return "feasible", res.x
    return "unknown", getattr(res, "x", None)


def _grid_witness_hunt(p: PreferenceProfile) -> Embedding | None:
    """Seeded min-conflicts search for an integer witness on a small grid.

    Purely a fast path for feasible profiles: a found witness is verified
    exactly, and failure proves nothing.  Deterministic for a given
    profile.
    """
    n, m = p.n, p.m
    pairs: list[tuple[int, int, int]] = []  # (voter idx, pref idx, other idx)
    for i in range(n):
        order = p.orders[i]
        for t in range(m - 1):
            pairs.append((i, n + order[t] - 1, n + order[t + 1] - 1))
    if not pairs:
        zero = (Fraction(0), Fraction(0))
        return Embedding(2, tuple([zero] * n), tuple([zero] * m))
    touching: list[list[int]] = [[] for _ in range(n + m)]
    for idx, (i, a, b) in enumerate(pairs):
        for pt in (i, a, b):
            touching[pt].append(idx)
    step_sizes = (1, 2, 4, 8)
    for restart, (seed, box, max_steps) in enumerate(
        ((0, 4 * m, 6000), (1, 4 * m, 12000), (2, 8 * m, 20000), (3, 2 * (n + m), 20000))
    ):
        rng = random.Random(7919 * seed + 131 * n + m)
        pts = [[rng.randint(0, box), rng.randint(0, box)] for _ in range(n + m)]

        def dist(a: int, b: int) -> int:
            return abs(pts[a][0] - pts[b][0]) + abs(pts[a][1] - pts[b][1])

        def pair_pen(idx: int) -> int:
            i, a, b = pairs[idx]
            return max(0, dist(i, a) - dist(i, b) + 1)

        pen = [pair_pen(k) for k in range(len(pairs))]
        total = sum(pen)
        for _ in range(max_steps):
            if total == 0:
                break
            viol = [k for k, v in enumerate(pen) if v > 0]
            moved = pairs[rng.choice(viol)][rng.randrange(3)]
            old = (pts[moved][0], pts[moved][1])
            cands = []
            for _ in range(10):
                dx = rng.choice((-1, 0, 1)) * rng.choice(step_sizes)
                dy = rng.choice((-1, 0, 1)) * rng.choice(step_sizes)
                nx, ny = old[0] + dx, old[1] + dy
                if (dx or dy) and 0 <= nx <= box and 0 <= ny <= box:
                    cands.append((nx, ny))
            if not cands:
                continue
            best_delta, best_move = 0, None
            for cand in cands:
                pts[moved][0], pts[moved][1] = cand
                delta = sum(pair_pen(k) - pen[k] for k in touching[moved])
                if delta < best_delta:
                    best_delta, best_move = delta, cand
            if best_move is None:
                # sideways kick to escape plateaus
                best_move = cands[rng.randrange(len(cands))]
            pts[moved][0], pts[moved][1] = best_move
            for k in touching[moved]:
                new_pen = pair_pen(k)
                total += new_pen - pen[k]
                pen[k] = new_pen
        if total == 0:
            voters = tuple(
                (Fraction(pts[i][0]), Fraction(pts[i][1])) for i in range(n)
            )
            alts = tuple(
                (Fraction(pts[n + j][0]), Fraction(pts[n + j][1])) for j in range(m)
            )
            e = Embedding(2, voters, alts)
            if verify_embedding(p, e, "l1") is None:
                return e
    return None


class _BudgetExhausted(Exception):
    pass


class _Search:
    """Depth-first sign enumeration with conflict learning.

    The hunt phase dives for a witness using only the floating-point
    screen; any witness it finds is promoted to exact rationals and
    verified, so a hunt success is exact.  If the hunt exhausts its tree,
    the proof phase re-runs the search with every cut confirmed by the
    exact solver; only then is "infeasible" claimed.

    Branching is per (voter, alternative) cell: both axis signs are fixed
    together so every child activates that cell's margin row and the
    screen at the child is informative.  Cells are ordered
    alternative-major, which places one alternative at a time relative to
    all voters and surfaces cross-voter conflicts early.

    Every exact infeasibility certificate is distilled into a nogood: the
    set of sign decisions its support rows depend on.  Any later node whose
    assignment contains a stored nogood is pruned without solving anything,
    which is what makes exhausting the tree of an infeasible profile
    affordable.
    """

    def __init__(self, p: PreferenceProfile, budget: int | None, margin: Fraction):
        self.p = p
        self.budget = budget
        self.margin = margin
        self.signs: dict[SignKey, int] = {}
        self.nodes = 0
        self.prunes = 0
        self.nogoods: list[dict[SignKey, int]] = []
        self.empty_nogood = False
        self.buckets: dict[tuple[int, int], list[dict[SignKey, int]]] = {}
        # Only signs on the less-preferred side of some comparison ever
        # gate a constraint; each voter's top alternative is handled
        # exactly by its surrogate bounds and never needs branching.
        cells = []
        self.prev_alt: dict[tuple[int, int], int] = {}
        for i in range(1, p.n + 1):
            order = p.orders[i - 1]
            for pos in range(1, p.m):
                cells.append((order[pos], i))
                self.prev_alt[(i, order[pos])] = order[pos - 1]
        self.cells: list[tuple[int, int]] = sorted(cells)

    def run(self) -> Embedding | None:
        witness = _grid_witness_hunt(self.p)
        if witness is not None:
            return witness
        witness = self._hunt_node(0, None)
        if witness is not None:
            return witness
        result = self._exact_node(None, None)
        return result if isinstance(result, Embedding) else None

    # ------------------------------------------------------------------
    # hunt phase: float screens only, no learning, failure proves nothing
    # ------------------------------------------------------------------

    def _hunt_node(self, depth: int, hint: np.ndarray | None) -> Embedding | None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetExhausted
        system, _ = _assemble(self.p, self.signs, self.margin)
        status, xs = _float_screen(system)
        if status == "infeasible":
            return None
        if depth == len(self.cells):
            if xs is not None:
                e = self._rationalize(xs)
                if e is not None:
                    return e
            exact = solve_feasibility(system)
            if not exact.feasible:
                return None
            return extract_witness(self.p, exact)
        if xs is not None:
            hint = xs
        j, i = self.cells[depth]
        for s1, s2 in self._combo_order(i, j, hint):
            self.signs[(i, j, 1)] = s1
            self.signs[(i, j, 2)] = s2
            result = self._hunt_node(depth + 1, hint)
            del self.signs[(i, j, 1)]
            del self.signs[(i, j, 2)]
            if result is not None:
                return result
        return None

    # ------------------------------------------------------------------
    # proof phase: every cut carries an exact conflict; child conflicts
    # resolve into parent nogoods and enable backjumping
    # ------------------------------------------------------------------

    def _exact_node(
        self, last_cell: tuple[int, int] | None, hint: np.ndarray | None
    ) -> Embedding | dict[SignKey, int]:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetExhausted
        hit = self._nogood_hit(last_cell)
        if hit is not None:
            self.prunes += 1
            return hit
        system, deps = _assemble(self.p, self.signs, self.margin)
        exact = solve_feasibility(system)
        if not exact.feasible:
            self.prunes += 1
            conflict = self._minimize_conflict(
                _conflict_from_certificate(deps, exact.certificate)
            )
            self._learn(conflict)
            return conflict
        undecided = [c for c in self.cells if (c[1], c[0], 1) not in self.signs]
        if not undecided:
            return extract_witness(self.p, exact)
        e = _try_witness(self.p, exact)
        if e is not None:
            return e
        xs = np.array([float(v) for v in exact.witness])
        j, i = self._select_cell(undecided, xs)
        key1, key2 = (i, j, 1), (i, j, 2)
        reason: dict[SignKey, int] = {}
        for s1, s2 in self._combo_order(i, j, xs):
            skip_reason = self._combo_blocked(i, j, s1, s2)
            if skip_reason is not None:
                self.prunes += 1
                result: Embedding | dict[SignKey, int] = skip_reason
            else:
                self.signs[key1] = s1
                self.signs[key2] = s2
                result = self._exact_node((j, i), xs)
                del self.signs[key1]
                del self.signs[key2]
            if isinstance(result, Embedding):
                return result
            if key1 not in result and key2 not in result:
                # The subtree failed for reasons not involving this cell, so
                # the same conflict rules out every sibling: backjump.
                return result
            for k, v in result.items():
                if k != key1 and k != key2:
                    reason[k] = v
        self._learn(reason)
        return reason

    def _combo_blocked(
        self, i: int, j: int, s1: int, s2: int
    ) -> dict[SignKey, int] | None:
        """Return the nogood ruling out this child combo, if one fires."""
        signs = self.signs
        for ng in self.buckets.get((j, i), ()):  # type: ignore[union-attr]
            hit = True
            for key, val in ng.items():
                if key == (i, j, 1):
                    if val != s1:
                        hit = False
                        break
                elif key == (i, j, 2):
                    if val != s2:
                        hit = False
                        break
                elif signs.get(key) != val:
                    hit = False
                    break
            if hit:
                return ng
        return None

    def _select_cell(
        self, undecided: list[tuple[int, int]], hint: np.ndarray | None
    ) -> tuple[int, int]:
        """Fail-first: branch on the cell whose chain constraint the current
        relaxation witness violates the most; lexicographic ties."""
        if hint is None:
            return undecided[0]
        p = self.p
        best_cell = undecided[0]
        best_viol = None
        for j, i in undecided:
            dj = abs(hint[voter_var(i, 1)] - hint[alt_var(p, j, 1)]) + abs(
                hint[voter_var(i, 2)] - hint[alt_var(p, j, 2)]
            )
            prev = self.prev_alt[(i, j)]
            dp = abs(hint[voter_var(i, 1)] - hint[alt_var(p, prev, 1)]) + abs(
                hint[voter_var(i, 2)] - hint[alt_var(p, prev, 2)]
            )
            viol = dp + 1.0 - dj
            if best_viol is None or viol > best_viol + 1e-12:
                best_viol = viol
                best_cell = (j, i)
        return best_cell

    def _rationalize(self, xs: np.ndarray) -> Embedding | None:
        """Try to promote a float LP point to an exact witness."""
        n_coord = num_coordinate_vars(self.p)
        coords = [
            Fraction(float(xs[v])).limit_denominator(10**6) for v in range(n_coord)
        ]
        scale = lcm(*(c.denominator for c in coords)) if coords else 1
        e = _embedding_from_values(self.p, [c * scale for c in coords])
        if verify_embedding(self.p, e, "l1") is None:
            return e
        return None

    def _combo_order(
        self, i: int, j: int, hint: np.ndarray | None
    ) -> tuple[tuple[int, int], ...]:
        g1 = g2 = NONNEG
        if hint is not None:
            if hint[voter_var(i, 1)] - hint[alt_var(self.p, j, 1)] < 0:
                g1 = NONPOS
            if hint[voter_var(i, 2)] - hint[alt_var(self.p, j, 2)] < 0:
                g2 = NONPOS
        return ((g1, g2), (g1, -g2), (-g1, g2), (-g1, -g2))

    def _nogood_hit(
        self, last_cell: tuple[int, int] | None
    ) -> dict[SignKey, int] | None:
        """A nogood can newly fire only when one of its cells was just
        assigned, so scanning the freshly assigned cell's bucket suffices:
        nogoods fully inside earlier assignments fired at those nodes."""
        if self.empty_nogood:
            return {}
        if last_cell is None:
            return None
        signs = self.signs
        for ng in self.buckets.get(last_cell, ()):  # type: ignore[union-attr]
            hit = True
            for key, val in ng.items():
                if signs.get(key) != val:
                    hit = False
                    break
            if hit:
                return ng
        return None

    def _minimize_conflict(
        self, conflict: dict[SignKey, int]
    ) -> dict[SignKey, int]:
        """Shrink an LP-derived conflict by deletion filtering: drop each
        sign whose removal leaves the induced system exactly infeasible.
        Latest-assigned signs are tried first, which biases the minimal
        conflict toward shallow decisions and lets backjumps climb higher.
        """
        if len(conflict) <= 2:
            return conflict
        current = dict(conflict)
        order = [k for k in reversed(self.signs) if k in conflict]
        for key in order:
            if len(current) <= 1:
                break
            val = current.pop(key)
            system, _ = _assemble(self.p, current, self.margin)
            if solve_feasibility(system).feasible:
                current[key] = val
        return current

    def _learn(self, nogood: dict[SignKey, int]) -> None:
        if not nogood:
            self.empty_nogood = True
            return
        # Skip the new nogood when an at-least-as-general one is known.
        for ng in self.nogoods:
            if all(nogood.get(k) == v for k, v in ng.items()):
                return
        stored = dict(nogood)
        self.nogoods.append(stored)
        for i, j, _k in stored:
            bucket = self.buckets.setdefault((j, i), [])
            if not bucket or bucket[-1] is not stored:
                bucket.append(stored)


def _try_witness(p: PreferenceProfile, result: FeasibilityResult) -> Embedding | None:
    """Opportunistic check: a relaxation witness may already realize the
    whole profile."""
    coords = result.witness[: num_coordinate_vars(p)]
    scale = lcm(*(c.denominator for c in coords)) if coords else 1
    e = _embedding_from_values(p, [c * scale for c in coords])
    if verify_embedding(p, e, "l1") is None:
        return e
    return None


def _conflict_from_certificate(
    deps: tuple[tuple[_SignItem, ...], ...],
    certificate: tuple[Fraction, ...] | None,
) -> dict[SignKey, int]:
    nogood: dict[SignKey, int] = {}
    if certificate is None:
        return nogood
    for lam, row_deps in zip(certificate, deps):
        if lam == 0:
            continue
        for i, j, k, sigma in row_deps:
            nogood[(i, j, k)] = sigma
    return nogood


def recognize_2d(
    p: PreferenceProfile, budget: int | None = None
) -> RecognitionOutcome:
    """Decide whether `p` has a two-dimensional Manhattan embedding.

    Feasible outcomes carry an integer-coordinate witness that has been
    re-verified; infeasible means the sign tree was exhausted with every
    leaf excluded by an exact infeasibility certificate.  With a node
    budget, exhaustion of the budget yields "undecided", never a claim.
    For three-voter profiles the forbidden-configuration test runs first
    as a fast path.
    """
    t0 = time.perf_counter()
    fast: ThreeVoterVerdict | None = None
    if p.n == 3:
        verdict = three_voter_obstruction(p, (1, 2, 3))
        if verdict.obstruction:
            millis = (time.perf_counter() - t0) * 1000
            return RecognitionOutcome(
                "infeasible", None, nodes=0, prunes=0, millis=millis,
                fast_certificate=verdict,
            )
    search = _Search(p, budget, _ONE)
    try:
        witness = search.run()
    except _BudgetExhausted:
        millis = (time.perf_counter() - t0) * 1000
        return RecognitionOutcome(
            "undecided", None, search.nodes, search.prunes, millis, fast
        )
    millis = (time.perf_counter() - t0) * 1000
    if witness is not None:
        return RecognitionOutcome(
            "feasible", witness, search.nodes, search.prunes, millis, fast
        )
    return RecognitionOutcome(
        "infeasible", None, search.nodes, search.prunes, millis, fast
    )
