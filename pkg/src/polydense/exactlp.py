"""Exact rational linear feasibility with certificates.

This is the single geometric kernel behind edge tests, origin-in-hull tests
and chamber sign-vector feasibility.  The solver is a dense two-phase
simplex with Bland's anti-cycling rule, run on an integer tableau with a
common denominator (fraction-free pivoting: each pivot divides exactly by
the previous pivot element), so every comparison and every certificate is
exact.

Certificate conventions:

* ``strict_separation(S)``: Feasible means some h satisfies h·s > 0 for all
  s in S; the witness is such an h.  Infeasible comes with nonnegative
  multipliers lam, sum(lam) = 1, sum(lam_s s) = 0, which contradict any
  candidate h exactly (0 = h·0 = sum lam_s h·s > 0).
* ``origin_in_conv(S)``: Feasible means the origin lies in conv(S); the
  witness is the convex combination.  Infeasible carries a separating
  functional h with h·s >= 1 for every s.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import DimensionMismatch

__all__ = [
    "FEASIBLE",
    "INFEASIBLE",
    "RationalVector",
    "FeasibilityResult",
    "strict_separation",
    "origin_in_conv",
    "segment_hull_intersect",
    "check_strict_witness",
    "check_convex_combination",
]

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"

# vectors are plain tuples of exact rationals; ints are accepted on input
RationalVector = tuple[Fraction, ...]

_CHECK_DIVISION = bool(os.environ.get("POLYDENSE_LP_CHECK"))

_OPTIMAL, _UNBOUNDED, _EARLY_FEASIBLE = 0, 1, 2


@dataclass(frozen=True)
class FeasibilityResult:
    """Outcome of an exact feasibility query.

    ``witness`` is the solution vector when feasible; ``certificate`` is the
    refutation described in the module docstring when infeasible.  Both
    substitute exactly, with no tolerances.
    """

    status: str
    witness: tuple[Fraction, ...] | None = None
    certificate: tuple[Fraction, ...] | None = None

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE


def _coerce_vector(v: Sequence) -> tuple:
    return tuple(x if isinstance(x, (int, Fraction)) else Fraction(x) for x in v)


def _coerce_config(S: Iterable[Sequence], dim: int | None) -> tuple[list[tuple], int | None]:
    vecs = []
    d = dim
    for s in S:
        t = _coerce_vector(s)
        if d is None:
            d = len(t)
        elif len(t) != d:
            raise DimensionMismatch(f"vector of dim {len(t)} in a dim-{d} system")
        vecs.append(t)
    return vecs, d


def _clear_denominators(values: Sequence) -> tuple[list[int], int]:
    """Scale a row to integers; returns (scaled row, multiplier used)."""
    mult = 1
    for x in values:
        if type(x) is not int:
            mult = lcm(mult, x.denominator)
    if mult == 1:
        return [int(x) for x in values], 1
    return [x * mult if type(x) is int else int(x * mult) for x in values], mult


def _exact_div(value: int, den: int) -> int:
    if _CHECK_DIVISION:
        q, rem = divmod(value, den)
        if rem:
            raise ArithmeticError("integer pivot division was not exact")
        return q
    return value // den


class _Tableau:
    """Integer simplex tableau: stored entries are true values times ``den``."""

    def __init__(self, rows: list[list[int]], rhs: list[int], nstruct: int):
        m = len(rows)
        self.m = m
        self.n = nstruct
        self.den = 1
        self.flip: list[int] = []
        data: list[list[int]] = []
        for row, b in zip(rows, rhs):
            if b < 0:
                row = [-x for x in row]
                b = -b
                self.flip.append(-1)
            else:
                row = list(row)
                self.flip.append(1)
            row.extend(0 for _ in range(m))
            row.append(b)
            data.append(row)
        for i in range(m):
            data[i][nstruct + i] = 1
        self.rows = data
        self.rhs_col = nstruct + m
        self.basis = [nstruct + i for i in range(m)]
        self.active = [True] * m
        obj1 = [0] * (self.rhs_col + 1)
        for j in range(nstruct):
            obj1[j] = -sum(data[i][j] for i in range(m))
        obj1[self.rhs_col] = -sum(r[self.rhs_col] for r in data)
        self.obj1 = obj1
        self.obj2: list[int] | None = None

    def set_cost(self, cost: Sequence[int]) -> None:
        obj2 = [0] * (self.rhs_col + 1)
        obj2[: len(cost)] = [int(c) for c in cost]
        self.obj2 = obj2

    def _pivot(self, r: int, c: int) -> None:
        rows = self.rows
        rowr = rows[r]
        den = self.den
        piv = rowr[c]
        for i in range(self.m):
            if i == r or not self.active[i]:
                continue
            row = rows[i]
            f = row[c]
            if f:
                rows[i] = [_exact_div(piv * x - f * y, den) for x, y in zip(row, rowr)]
            elif piv != den:
                rows[i] = [_exact_div(piv * x, den) for x in row]
        f = self.obj1[c]
        if f:
            self.obj1 = [_exact_div(piv * x - f * y, den) for x, y in zip(self.obj1, rowr)]
        elif piv != den:
            self.obj1 = [_exact_div(piv * x, den) for x in self.obj1]
        if self.obj2 is not None:
            f = self.obj2[c]
            if f:
                self.obj2 = [_exact_div(piv * x - f * y, den) for x, y in zip(self.obj2, rowr)]
            elif piv != den:
                self.obj2 = [_exact_div(piv * x, den) for x in self.obj2]
        self.den = piv
        self.basis[r] = c

    def _run(self, phase: int, ncols: int, early_zero: bool = False) -> int:
        rows = self.rows
        rhs = self.rhs_col
        iters = 0
        while True:
            obj = self.obj1 if phase == 1 else self.obj2
            iters += 1
            if iters > 200_000:
                raise RuntimeError("simplex iteration cap exceeded")
            if early_zero and obj[rhs] == 0:
                return _EARLY_FEASIBLE
            enter = -1
            for j in range(ncols):
                if obj[j] < 0:
                    enter = j
                    break
            if enter < 0:
                return _OPTIMAL
            leave = -1
            for i in range(self.m):
                if not self.active[i]:
                    continue
                a = rows[i][enter]
                if a > 0:
                    if leave < 0:
                        leave = i
                    else:
                        lhs = rows[i][rhs] * rows[leave][enter]
                        rhv = rows[leave][rhs] * a
                        if lhs < rhv or (lhs == rhv and self.basis[i] < self.basis[leave]):
                            leave = i
            if leave < 0:
                return _UNBOUNDED
            self._pivot(leave, enter)

    def phase_one(self) -> bool:
        """Run the feasibility phase; True iff the system is feasible."""
        status = self._run(1, self.n + self.m, early_zero=True)
        if status == _UNBOUNDED:
            raise RuntimeError("phase-one objective cannot be unbounded")
        return self.obj1[self.rhs_col] == 0

    def farkas(self) -> list[Fraction]:
        """Row multipliers proving infeasibility (after phase_one() is False)."""
        den = self.den
        out = []
        for i in range(self.m):
            y = 1 - Fraction(self.obj1[self.n + i], den)
            out.append(self.flip[i] * y)
        return out

    def drive_out_artificials(self) -> None:
        for i in range(self.m):
            if not self.active[i] or self.basis[i] < self.n:
                continue
            row = self.rows[i]
            col = next((j for j in range(self.n) if row[j] != 0), None)
            if col is None:
                self.active[i] = False
                continue
            if row[col] < 0:
                self.rows[i] = [-x for x in row]
            self._pivot(i, col)

    def phase_two(self) -> int:
        self.drive_out_artificials()
        return self._run(2, self.n)

    def solution(self) -> list[Fraction]:
        x = [Fraction(0)] * self.n
        den = self.den
        for i in range(self.m):
            if self.active[i] and self.basis[i] < self.n:
                x[self.basis[i]] = Fraction(self.rows[i][self.rhs_col], den)
        return x


def strict_separation(S: Iterable[Sequence], dim: int | None = None) -> FeasibilityResult:
    """Decide whether some h has h·s > 0 for every s in S.

    Strictness is handled by maximizing a slack t subject to h·s >= t with h
    confined to the box [-1, 1]^dim; the strict system is solvable iff the
    optimal slack is positive (an exact comparison).  An empty S is
    vacuously feasible.
    """
    vecs, d = _coerce_config(S, dim)
    if not vecs:
        return FeasibilityResult(FEASIBLE, witness=tuple([Fraction(0)] * (d or 0)))
    assert d is not None
    m = len(vecs)
    # variables: u_0..u_{d-1} (h = u - 1), t, w_0..w_{m-1}, v_0..v_{d-1}
    nstruct = d + 1 + m + d
    rows: list[list[int]] = []
    rhs: list[int] = []
    for j, s in enumerate(vecs):
        scaled, mult = _clear_denominators(list(s) + [sum(s)])
        row = [0] * nstruct
        row[:d] = scaled[:d]
        row[d] = -mult
        row[d + 1 + j] = -mult
        rows.append(row)
        rhs.append(scaled[d])
    for i in range(d):
        row = [0] * nstruct
        row[i] = 1
        row[d + 1 + m + i] = 1
        rows.append(row)
        rhs.append(2)
    tab = _Tableau(rows, rhs, nstruct)
    tab.set_cost([0] * d + [-1] + [0] * (m + d))
    if not tab.phase_one():
        raise RuntimeError("slack system is always feasible at h=0, t=0")
    if tab.phase_two() == _UNBOUNDED:
        raise RuntimeError("boxed slack objective cannot be unbounded")
    x = tab.solution()
    if x[d] > 0:
        h = tuple(x[i] - 1 for i in range(d))
        return FeasibilityResult(FEASIBLE, witness=h)
    inner = origin_in_conv(vecs)
    if not inner.feasible:
        raise RuntimeError("separation and hull membership disagree")
    return FeasibilityResult(INFEASIBLE, certificate=inner.witness)


def origin_in_conv(S: Iterable[Sequence], dim: int | None = None) -> FeasibilityResult:
    """Decide whether the origin lies in the convex hull of the finite set S.

    Feasible status means it does (witness: the convex coefficients);
    infeasible status carries a separating h with h·s >= 1 for all s.
    """
    vecs, d = _coerce_config(S, dim)
    if not vecs:
        return FeasibilityResult(INFEASIBLE, certificate=tuple([Fraction(0)] * (d or 0)))
    assert d is not None
    m = len(vecs)
    rows = []
    rhs = []
    scales = []
    for i in range(d):
        ints, mult = _clear_denominators([s[i] for s in vecs])
        scales.append(mult)
        rows.append(ints)
        rhs.append(0)
    rows.append([1] * m)
    rhs.append(1)
    tab = _Tableau(rows, rhs, m)
    if tab.phase_one():
        return FeasibilityResult(FEASIBLE, witness=tuple(tab.solution()))
    y = tab.farkas()
    margin = y[d]
    if margin <= 0:
        raise RuntimeError("Farkas multiplier of the convexity row must be positive")
    h = tuple(-y[i] * scales[i] / margin for i in range(d))
    return FeasibilityResult(INFEASIBLE, certificate=h)


def segment_hull_intersect(a: Sequence, b: Sequence, S: Iterable[Sequence]) -> bool:
    """Whether the segment [a, b] meets conv(S); exact LP feasibility."""
    av = _coerce_vector(a)
    bv = _coerce_vector(b)
    if len(av) != len(bv):
        raise DimensionMismatch(f"segment endpoints of dims {len(av)} and {len(bv)}")
    vecs, d = _coerce_config(S, len(av))
    if not vecs:
        return False
    m = len(vecs)
    # variables: lam_0..lam_{m-1}, t, u (slack of t <= 1)
    nstruct = m + 2
    rows = []
    rhs = []
    for i in range(d):
        raw = [s[i] for s in vecs] + [av[i] - bv[i], av[i]]
        ints, _ = _clear_denominators(raw)
        rows.append(ints[:m] + [ints[m], 0])
        rhs.append(ints[m + 1])
    rows.append([1] * m + [0, 0])
    rhs.append(1)
    rows.append([0] * m + [1, 1])
    rhs.append(1)
    tab = _Tableau(rows, rhs, nstruct)
    return tab.phase_one()


def check_strict_witness(S: Iterable[Sequence], h: Sequence) -> bool:
    """Exact check that h·s > 0 for every s in S."""
    hv = _coerce_vector(h)
    for s in S:
        sv = _coerce_vector(s)
        if len(sv) != len(hv):
            raise DimensionMismatch("witness dimension mismatch")
        if sum(x * y for x, y in zip(hv, sv)) <= 0:
            return False
    return True


def check_convex_combination(S: Iterable[Sequence], lam: Sequence,
                             target: Sequence | None = None) -> bool:
    """Exact check that lam is a convex combination of S equal to ``target``
    (the origin by default)."""
    vecs, d = _coerce_config(S, None)
    weights = [x if isinstance(x, (int, Fraction)) else Fraction(x) for x in lam]
    if len(weights) != len(vecs) or d is None:
        return False
    if any(w < 0 for w in weights) or sum(weights) != 1:
        return False
    goal = _coerce_vector(target) if target is not None else tuple([Fraction(0)] * d)
    for i in range(d):
        if sum(w * s[i] for w, s in zip(weights, vecs)) != goal[i]:
            return False
    return True
