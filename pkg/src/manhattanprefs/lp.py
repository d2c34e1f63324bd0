"""Exact rational linear-program feasibility with checkable certificates.

A phase-one simplex over arbitrary-precision rationals decides whether a
system of weak linear constraints has a solution.  Feasible systems yield
a witness that satisfies every constraint exactly; infeasible systems
yield multipliers that combine the constraints into 0 >= positive.  Both
artifacts are re-checked before being returned, so a buggy pivot cannot
produce a quietly wrong answer.

Rows are stored as integer vectors with one positive denominator each and
re-reduced after every pivot, which keeps the arithmetic in (fast) machine
integers for realistic sizes while staying exact.

Strict inequalities never reach this module: callers encode them with a
unit margin, which is sound whenever their system is invariant under
uniform positive scaling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

GE = ">="
EQ = "=="

_ZERO = Fraction(0)
_ONE = Fraction(1)

# Consecutive degenerate pivots tolerated under the default (largest
# improvement) entering rule before switching to Bland's least-index rule,
# which cannot cycle.
_DEGENERATE_STREAK_LIMIT = 20


class LPError(ValueError):
    """Malformed systems or internal solver-consistency failures."""


@dataclass(frozen=True)
class LinearConstraint:
    """Sparse constraint  sum(coeffs[v] * x_v)  rel  rhs,  rel in {>=, ==}."""

    coeffs: Mapping[int, Fraction]
    rel: str
    rhs: Fraction

    def evaluate(self, x: tuple[Fraction, ...]) -> Fraction:
        return sum((c * x[v] for v, c in self.coeffs.items()), _ZERO)

    def satisfied_by(self, x: tuple[Fraction, ...]) -> bool:
        lhs = self.evaluate(x)
        return lhs >= self.rhs if self.rel == GE else lhs == self.rhs


@dataclass(frozen=True)
class LinearSystem:
    num_vars: int
    constraints: tuple[LinearConstraint, ...]

    def __post_init__(self) -> None:
        for k, con in enumerate(self.constraints):
            if con.rel not in (GE, EQ):
                raise LPError(f"constraint {k}: unknown relation {con.rel!r}")
            for v in con.coeffs:
                if not 0 <= v < self.num_vars:
                    raise LPError(f"constraint {k}: variable {v} out of range")


@dataclass(frozen=True)
class FeasibilityResult:
    """Either a witness assignment or a Farkas certificate.

    certificate[k] is the multiplier of constraint k; multipliers of
    inequality rows are nonnegative and the combined constraint has zero
    coefficients and strictly positive right-hand side.
    """

    feasible: bool
    witness: tuple[Fraction, ...] | None = None
    certificate: tuple[Fraction, ...] | None = None


def check_farkas_certificate(sys: LinearSystem, mult: tuple[Fraction, ...]) -> bool:
    """True iff `mult` combines the system into the contradiction 0 >= r > 0."""
    if len(mult) != len(sys.constraints):
        return False
    combined = [_ZERO] * sys.num_vars
    rhs = _ZERO
    for lam, con in zip(mult, sys.constraints):
        if con.rel == GE and lam < 0:
            return False
        if lam == 0:
            continue
        for v, c in con.coeffs.items():
            combined[v] += lam * c
        rhs += lam * con.rhs
    return all(c == 0 for c in combined) and rhs > 0


class _Row:
    """Integer row with a positive denominator: entry j is nums[j]/den."""

    __slots__ = ("nums", "den")

    def __init__(self, nums: list[int], den: int):
        self.nums = nums
        self.den = den

    def reduce(self) -> None:
        g = self.den
        for v in self.nums:
            if v:
                g = math.gcd(g, v)
                if g == 1:
                    return
        if g > 1:
            self.nums = [v // g for v in self.nums]
            self.den //= g

    def value(self, j: int) -> Fraction:
        return Fraction(self.nums[j], self.den)


def solve_feasibility(sys: LinearSystem) -> FeasibilityResult:
    """Exact phase-one simplex feasibility test.

    Deterministic: the entering rule is largest reduced-cost improvement
    with lowest-index ties, falling back to Bland's least-index rule after
    a long degenerate streak; the leaving rule always takes the smallest
    basic index among minimum ratios.  Identical systems therefore produce
    identical witnesses and certificates.
    """
    n_vars = sys.num_vars
    n_rows = len(sys.constraints)

    # Column layout: split vars (2*n_vars), then one slack per >= row,
    # then one artificial per row that needs one; rhs rides at the end.
    slack_of_row: list[int | None] = []
    ge_seen = 0
    for con in sys.constraints:
        if con.rel == GE:
            slack_of_row.append(2 * n_vars + ge_seen)
            ge_seen += 1
        else:
            slack_of_row.append(None)
    art_base = 2 * n_vars + ge_seen

    flips: list[int] = []
    art_of_row: list[int | None] = []
    n_art = 0
    for con in sys.constraints:
        # Flip rows to make the right-hand side nonnegative; a flipped
        # >= row's slack enters with +1 and can start basic.
        if con.rhs > 0:
            flip, needs_art = 1, True
        elif con.rhs < 0:
            flip, needs_art = -1, con.rel == EQ
        else:
            flip, needs_art = (-1, False) if con.rel == GE else (1, True)
        flips.append(flip)
        if needs_art:
            art_of_row.append(art_base + n_art)
            n_art += 1
        else:
            art_of_row.append(None)

    n_cols = art_base + n_art
    rhs_col = n_cols
    rows: list[_Row] = []
    basis: list[int] = []
    for r, con in enumerate(sys.constraints):
        den = math.lcm(
            con.rhs.denominator, *(c.denominator for c in con.coeffs.values())
        ) if con.coeffs else con.rhs.denominator
        nums = [0] * (n_cols + 1)
        sigma = flips[r]
        for v, c in con.coeffs.items():
            val = sigma * int(c * den)
            nums[2 * v] += val
            nums[2 * v + 1] -= val
        sl = slack_of_row[r]
        if sl is not None:
            nums[sl] = -sigma * den
        art = art_of_row[r]
        if art is not None:
            nums[art] = den
            basis.append(art)
        else:
            basis.append(sl)  # type: ignore[arg-type]
        nums[rhs_col] = sigma * int(con.rhs * den)
        row = _Row(nums, den)
        row.reduce()
        rows.append(row)

    # Reduced-cost row for minimize(sum of artificials): subtract every
    # artificial-basic row from the cost vector, over a common denominator.
    art_rows = [r for r in range(n_rows) if art_of_row[r] is not None]
    obj_den = math.lcm(*(rows[r].den for r in art_rows)) if art_rows else 1
    obj_nums = [0] * (n_cols + 1)
    for j in range(art_base, n_cols):
        obj_nums[j] = obj_den
    for r in art_rows:
        mult = obj_den // rows[r].den
        rnums = rows[r].nums
        for j in range(n_cols + 1):
            if rnums[j]:
                obj_nums[j] -= rnums[j] * mult
    obj = _Row(obj_nums, obj_den)
    obj.reduce()

    barred = [False] * n_cols  # artificials may not re-enter once they leave
    use_bland = False
    degenerate_streak = 0

    while True:
        enter = -1
        if use_bland:
            for j in range(n_cols):
                if not barred[j] and obj.nums[j] < 0:
                    enter = j
                    break
        else:
            best = 0  # all reduced costs share obj.den, so compare numerators
            for j in range(n_cols):
                if not barred[j] and obj.nums[j] < best:
                    best = obj.nums[j]
                    enter = j
        if enter < 0:
            break
        leave = -1
        lv_num = lv_den = 0
        for r in range(n_rows):
            a = rows[r].nums[enter]
            if a > 0:
                num, den = rows[r].nums[rhs_col], a  # ratio = num/den, den > 0
                if (
                    leave < 0
                    or num * lv_den < lv_num * den
                    or (num * lv_den == lv_num * den and basis[r] < basis[leave])
                ):
                    lv_num, lv_den = num, den
                    leave = r
        if leave < 0:
            # Unbounded cannot happen in phase one (objective >= 0).
            raise LPError("phase-one ratio test failed; solver bug")
        if lv_num == 0:
            degenerate_streak += 1
            if degenerate_streak > _DEGENERATE_STREAK_LIMIT:
                use_bland = True
        else:
            degenerate_streak = 0
        leaving_col = basis[leave]
        if leaving_col >= art_base:
            barred[leaving_col] = True
        _pivot(rows, obj, leave, enter, rhs_col)
        basis[leave] = enter

    # objective value = -obj[rhs]
    if obj.nums[rhs_col] < 0:
        duals = []
        for r in range(n_rows):
            art = art_of_row[r]
            if art is not None:
                y = _ONE - obj.value(art)
            else:
                y = -obj.value(slack_of_row[r])  # type: ignore[arg-type]
            duals.append(flips[r] * y)
        certificate = tuple(duals)
        if not check_farkas_certificate(sys, certificate):
            raise LPError("extracted Farkas certificate failed verification")
        return FeasibilityResult(False, certificate=certificate)

    values = [_ZERO] * n_cols
    for r, col in enumerate(basis):
        values[col] = rows[r].value(rhs_col)
    witness = tuple(values[2 * v] - values[2 * v + 1] for v in range(n_vars))
    for k, con in enumerate(sys.constraints):
        if not con.satisfied_by(witness):
            raise LPError(f"extracted witness violates constraint {k}; solver bug")
    return FeasibilityResult(True, witness=witness)


def _pivot(rows: list[_Row], obj: _Row, leave: int, enter: int, rhs_col: int) -> None:
    piv_row = rows[leave]
    piv = piv_row.nums[enter]  # > 0 by the ratio test
    # Normalized pivot row is piv_row / (piv/den): nums unchanged, den = piv.
    new_piv = _Row(piv_row.nums, piv)
    new_piv.reduce()
    rows[leave] = new_piv
    p_nums = new_piv.nums
    p_den = new_piv.den
    nonzero = [j for j in range(rhs_col + 1) if p_nums[j]]
    for row in rows:
        if row is new_piv:
            continue
        f = row.nums[enter]
        if f:
            _eliminate(row, p_nums, p_den, f, nonzero)
    if obj.nums[enter]:
        _eliminate(obj, p_nums, p_den, obj.nums[enter], nonzero)


def _eliminate(row: _Row, p_nums: list[int], p_den: int, f: int, nonzero: list[int]) -> None:
    # row_new = row - (f/row.den) * (p/p_den)
    #         = (row.nums * p_den - f * p_nums) / (row.den * p_den)
    nums = row.nums
    if p_den != 1:
        for j, v in enumerate(nums):
            if v:
                nums[j] = v * p_den
    for j in nonzero:
        nums[j] -= f * p_nums[j]
    row.den *= p_den
    row.reduce()
