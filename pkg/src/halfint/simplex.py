"""Exact linear programming over the rationals.

Feasibility and optimization for systems ``A x = b, x >= 0`` via the
simplex method with Bland's anti-cycling rule, which makes termination
unconditional.  Exactness makes every verdict a certificate: a returned
witness satisfies the constraints with equality, ``None`` means the
system is infeasible, and an optimal value is exact.

Tableau arithmetic runs on gmpy2 rationals when available (several
times faster than Fraction) and converts back to Fraction at the
boundary.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .rationals import fastq

_Q0 = fastq(0)
_Q1 = fastq(1)


def _to_fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


class _Tableau:
    """Simplex tableau for ``A x = b, x >= 0`` with artificial basis."""

    def __init__(self, rows: Sequence[Sequence], rhs: Sequence):
        self.m = len(rows)
        self.n = len(rows[0]) if self.m else 0
        self.width = self.n + self.m
        self.rows: list[list] = []
        for i in range(self.m):
            row = [fastq(x) for x in rows[i]]
            b = fastq(rhs[i])
            if b < 0:
                row = [-x for x in row]
                b = -b
            row.extend(_Q1 if j == i else _Q0 for j in range(self.m))
            row.append(b)
            self.rows.append(row)
        self.basis = [self.n + i for i in range(self.m)]

    def pivot(self, pivot_row: int, entering: int) -> list:
        prow = self.rows[pivot_row]
        pivot = prow[entering]
        if pivot != 1:
            inv = _Q1 / pivot
            self.rows[pivot_row] = prow = [x * inv for x in prow]
        for i in range(self.m):
            if i != pivot_row:
                factor = self.rows[i][entering]
                if factor != 0:
                    trow = self.rows[i]
                    self.rows[i] = [a - factor * b for a, b in zip(trow, prow)]
        self.basis[pivot_row] = entering
        return prow

    def minimize(self, cost: list, objective, allowed_width: int, stop_when_negative: bool = False):
        """Run Bland pivots until the reduced costs are nonnegative.

        ``cost`` is the reduced-cost row and ``objective`` the current
        value of the minimized functional; both are updated in place /
        returned.  Entering variables are restricted to the first
        ``allowed_width`` columns.  With ``stop_when_negative`` the loop
        exits as soon as the objective drops below zero (the caller only
        needs the sign).
        """
        m = self.m
        while True:
            if stop_when_negative and objective < 0:
                return cost, objective
            entering = next(
                (j for j in range(allowed_width) if cost[j] < 0), None
            )
            if entering is None:
                return cost, objective
            pivot_row = None
            best_ratio = None
            for i in range(m):
                coef = self.rows[i][entering]
                if coef > 0:
                    ratio = self.rows[i][self.width] / coef
                    if (
                        best_ratio is None
                        or ratio < best_ratio
                        or (ratio == best_ratio and self.basis[i] < self.basis[pivot_row])
                    ):
                        best_ratio = ratio
                        pivot_row = i
            if pivot_row is None:
                raise ArithmeticError("simplex objective unbounded below")
            prow = self.pivot(pivot_row, entering)
            factor = cost[entering]
            if factor != 0:
                cost = [a - factor * b for a, b in zip(cost, prow[: self.width])]
                objective += factor * prow[self.width]

    def run_phase1(self):
        """Minimize the artificial sum; returns the residual objective."""
        cost = [-sum(self.rows[i][j] for i in range(self.m)) for j in range(self.n)]
        cost.extend(_Q0 for _ in range(self.m))
        objective = sum(self.rows[i][self.width] for i in range(self.m))
        _, objective = self.minimize(cost, objective, self.width)
        return objective

    def drop_artificials(self) -> None:
        """Drive basic artificials out, deleting dependent rows."""
        keep = []
        for i in range(self.m):
            if self.basis[i] < self.n:
                keep.append(i)
                continue
            entering = next(
                (j for j in range(self.n) if self.rows[i][j] != 0), None
            )
            if entering is not None:
                self.pivot(i, entering)
                keep.append(i)
        if len(keep) != self.m:
            self.rows = [self.rows[i] for i in keep]
            self.basis = [self.basis[i] for i in keep]
            self.m = len(keep)

    def solution(self) -> tuple[Fraction, ...]:
        witness = [Fraction(0)] * self.n
        for i in range(self.m):
            if self.basis[i] < self.n:
                witness[self.basis[i]] = _to_fraction(self.rows[i][self.width])
        return tuple(witness)


def lp_feasible(
    rows: Sequence[Sequence], rhs: Sequence
) -> Optional[tuple[Fraction, ...]]:
    """Exact witness for ``{x >= 0 : rows . x = rhs}``, or ``None``."""
    if not rows:
        return ()
    tab = _Tableau(rows, rhs)
    if tab.run_phase1() != 0:
        return None
    return tab.solution()


def lp_maximize(
    rows: Sequence[Sequence],
    rhs: Sequence,
    objective: Sequence,
    stop_when_positive: bool = False,
) -> Optional[tuple[Fraction, tuple[Fraction, ...]]]:
    """Maximize ``objective . x`` over ``{x >= 0 : rows . x = rhs}``.

    Returns ``(value, witness)`` or ``None`` when infeasible.  With
    ``stop_when_positive`` the search stops at the first feasible point
    of positive value, returning that point (callers that only need the
    sign of the maximum get their certificate early).  Raises
    ArithmeticError when the objective is unbounded.
    """
    if not rows:
        raise ValueError("maximization requires at least one constraint")
    tab = _Tableau(rows, rhs)
    if tab.run_phase1() != 0:
        return None
    tab.drop_artificials()
    # Minimize the negated objective; reduced costs relative to the
    # current basis.
    cost = [-fastq(c) for c in objective]
    cost.extend(_Q0 for _ in range(tab.width - tab.n))
    value = _Q0
    for i in range(tab.m):
        cb = cost[tab.basis[i]]
        if cb != 0:
            prow = tab.rows[i]
            cost = [a - cb * b for a, b in zip(cost, prow[: tab.width])]
            value += cb * prow[tab.width]
    _, value = tab.minimize(cost, value, tab.n, stop_when_negative=stop_when_positive)
    best = -value
    return _to_fraction(best), tab.solution()


def convex_combination(
    target: Sequence, points: Sequence[Sequence]
) -> Optional[list[Fraction]]:
    """Weights expressing ``target`` as a convex combination of ``points``.

    Returns a weight list aligned with ``points`` (entries may be zero),
    or ``None`` when ``target`` lies outside the convex hull.  Before
    the simplex runs, candidates that provably carry zero weight are
    eliminated; see :func:`prune_candidates`.
    """
    active = prune_candidates(target, points, list(range(len(points))))
    if active is None:
        return None
    rows, rhs = hull_system(target, points, active)
    solution = lp_feasible(rows, rhs)
    if solution is None:
        return None
    weights = [Fraction(0)] * len(points)
    for idx, w in zip(active, solution):
        weights[idx] = w
    return weights


def prune_candidates(
    target: Sequence, points: Sequence[Sequence], active: list[int]
) -> Optional[list[int]]:
    """Candidates that may carry weight in a convex representation.

    Whenever the target meets the active candidates' minimum (or
    maximum) in some coordinate, candidates strictly inside must carry
    zero weight and are dropped; a target outside the bounding box has
    no representation at all (returns ``None``).  Iterated to a fixed
    point.
    """
    dim = len(target)
    changed = True
    while changed:
        if not active:
            return None
        changed = False
        for k in range(dim):
            t = target[k]
            lo = hi = points[active[0]][k]
            for i in active:
                x = points[i][k]
                if x < lo:
                    lo = x
                elif x > hi:
                    hi = x
            if t < lo or t > hi:
                return None
            if lo == hi:
                continue
            if t == lo:
                keep = [i for i in active if points[i][k] == lo]
            elif t == hi:
                keep = [i for i in active if points[i][k] == hi]
            else:
                continue
            if len(keep) != len(active):
                active = keep
                changed = True
    return active


def hull_system(
    target: Sequence, points: Sequence[Sequence], active: list[int]
) -> tuple[list[list], list]:
    """Equality system for convex representations of ``target``.

    Coordinates in which every active candidate equals the target are
    redundant given the weight-sum row and are omitted.
    """
    rows = []
    rhs = []
    for k in range(len(target)):
        t = target[k]
        if any(points[i][k] != t for i in active):
            rows.append([points[i][k] for i in active])
            rhs.append(t)
    rows.append([1] * len(active))
    rhs.append(1)
    return rows, rhs
