"""Exact rational linear programming.

A dense two-phase tableau simplex with Bland's anti-cycling rule.  All
arithmetic is over :class:`fractions.Fraction`, so results are exact and
the method terminates on every input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import normalize

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    x: Optional[tuple] = None
    value: Optional[Fraction] = None

    @property
    def feasible(self) -> bool:
        return self.status != INFEASIBLE


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows  # list of lists of Fraction, RHS appended
        self.basis = basis
        for r, b in zip(self.rows, rhs):
            r.append(b)

    def pivot(self, r: int, col: int, obj: list):
        prow = self.rows[r]
        p = prow[col]
        if p != 1:
            prow = [x / p for x in prow]
            self.rows[r] = prow
        nz = [j for j, x in enumerate(prow) if x]
        for i, row in enumerate(self.rows):
            if i != r:
                f = row[col]
                if f:
                    for j in nz:
                        row[j] -= f * prow[j]
        f = obj[col]
        if f:
            for j in nz:
                obj[j] -= f * prow[j]
        self.basis[r] = col

    def run(self, obj: list, allowed: int) -> str:
        """Maximize with reduced-cost row ``obj``; columns >= ``allowed``
        never enter.  Bland's rule: smallest improving column, ties in the
        ratio test broken by the smallest basic variable."""
        rows = self.rows
        while True:
            col = next((j for j in range(allowed) if obj[j] > 0), None)
            if col is None:
                return OPTIMAL
            best = None
            for i, row in enumerate(rows):
                a = row[col]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], col, obj)


def linprog(c: Sequence, A_ub: Sequence = (), b_ub: Sequence = (),
            A_eq: Sequence = (), b_eq: Sequence = (),
            free: Sequence[bool] | None = None) -> LPResult:
    """Maximize ``c.x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq``.

    Variables are nonnegative unless flagged in ``free``.
    """
    nvar = len(c)
    free = list(free) if free is not None else [False] * nvar
    # split free variables into a difference of two nonnegative ones
    cols = []
    for j in range(nvar):
        cols.append((j, 1))
        if free[j]:
            cols.append((j, -1))
    ncol = len(cols)

    def expand(row):
        return [Fraction(row[j]) * s for j, s in cols]

    rows, rhs, kinds = [], [], []
    for row, b in zip(A_ub, b_ub):
        rows.append(expand(row))
        rhs.append(Fraction(b))
        kinds.append("ub")
    for row, b in zip(A_eq, b_eq):
        rows.append(expand(row))
        rhs.append(Fraction(b))
        kinds.append("eq")
    m = len(rows)
    n_slack = kinds.count("ub")

    # columns: structural | slack | artificial
    full, basis, artificial = [], [], []
    slack_at = ncol
    for i in range(m):
        slack = [Fraction(0)] * n_slack
        if kinds[i] == "ub":
            slack[slack_at - ncol] = Fraction(1)
            slack_col = slack_at
            slack_at += 1
        else:
            slack_col = None
        row = rows[i] + slack
        b = rhs[i]
        if b < 0:
            row = [-x for x in row]
            b = -b
            slack_col = None  # slack now has coefficient -1
        full.append((row, b, slack_col))
    n_struct = ncol + n_slack
    n_art = sum(1 for _, _, s in full if s is None)
    tab_rows, tab_rhs = [], []
    a_idx = n_struct
    for row, b, slack_col in full:
        art = [Fraction(0)] * n_art
        if slack_col is None:
            art[a_idx - n_struct] = Fraction(1)
            basis.append(a_idx)
            artificial.append(a_idx)
            a_idx += 1
        else:
            basis.append(slack_col)
        tab_rows.append(row + art)
        tab_rhs.append(b)
    total = n_struct + n_art
    tab = _Tableau(tab_rows, tab_rhs, basis)

    # phase 1: maximize -sum(artificials)
    if n_art:
        obj = [Fraction(0)] * (total + 1)
        for i, r in enumerate(tab.rows):
            if tab.basis[i] >= n_struct:
                for j in range(n_struct):
                    obj[j] += r[j]
                obj[-1] += r[-1]
        tab.run(obj, n_struct)
        if obj[-1] != 0:
            return LPResult(INFEASIBLE)
        # drive remaining artificials out of the basis
        keep = []
        for i in range(len(tab.rows)):
            if tab.basis[i] >= n_struct:
                col = next((j for j in range(n_struct) if tab.rows[i][j] != 0), None)
                if col is None:
                    continue  # redundant row
                tab.pivot(i, col, [Fraction(0)] * (total + 1))
            keep.append(i)
        tab.rows = [tab.rows[i] for i in keep]
        tab.basis = [tab.basis[i] for i in keep]

    cost = expand(list(c)) + [Fraction(0)] * (total - ncol)
    obj = cost + [Fraction(0)]
    for i, r in enumerate(tab.rows):
        cb = cost[tab.basis[i]]
        if cb:
            for j in range(total + 1):
                obj[j] -= cb * r[j]
    status = tab.run(obj, n_struct)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    xs = [Fraction(0)] * total
    for i, r in enumerate(tab.rows):
        xs[tab.basis[i]] = r[-1]
    x = [Fraction(0)] * nvar
    for k, (j, s) in enumerate(cols):
        x[j] += s * xs[k]
    value = sum(Fraction(ci) * xi for ci, xi in zip(c, x))
    return LPResult(OPTIMAL, tuple(normalize(v) for v in x), normalize(value))


def feasible_point(A_eq: Sequence, b_eq: Sequence, A_ub: Sequence = (), b_ub: Sequence = (),
                   free: Sequence[bool] | None = None) -> Optional[tuple]:
    """A point of the polyhedron, or None if it is empty."""
    nvar = len(A_eq[0]) if A_eq else len(A_ub[0])
    res = linprog([0] * nvar, A_ub, b_ub, A_eq, b_eq, free)
    return res.x if res.status == OPTIMAL else None
