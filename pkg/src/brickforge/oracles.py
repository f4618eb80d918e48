"""Slow, independent reference computations used to cross-check the fast paths.

Nothing here uses linear programming.  Hull membership is decided by
Caratheodory's theorem: after restricting to the affine hull, a point lies
in the convex hull of a full-dimensional set iff it lies in one of its
full-dimensional simplices.  Barycentric coordinates come from Cramer's
rule, evaluated for all simplices at once with integer-valued determinants.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

import numpy as np

from .linalg import rank, sub

# |det| must stay well inside the exactly representable float range
_DET_LIMIT = 2 ** 40


def _affine_chart(points: list) -> tuple:
    """Coordinate indices on which projection is injective on the affine hull."""
    base = points[0]
    diffs = [sub(p, base) for p in points[1:]]
    k = rank(diffs) if diffs else 0
    if k == 0:
        return ()
    chosen: list = []
    for i in range(len(base)):
        trial = chosen + [i]
        if rank([[d[j] for j in trial] for d in diffs]) == len(trial):
            chosen = trial
        if len(chosen) == k:
            break
    return tuple(chosen)


def _scaled_integer_rows(points: list) -> np.ndarray:
    den = 1
    for p in points:
        for x in p:
            den = den * Fraction(x).denominator // np.gcd(den, Fraction(x).denominator)
    return np.array([[int(Fraction(x) * den) for x in p] for p in points], dtype=np.int64)


def _inside_any_simplex(p: np.ndarray, others: np.ndarray, k: int) -> bool:
    """``p`` in some ``k``-simplex spanned by rows of ``others`` (dimension ``k``)."""
    m = len(others)
    if m < k + 1:
        return False
    bound = factorial(k + 1) * int(max(1, np.abs(others).max(), np.abs(p).max())) ** (k + 1)
    if bound > _DET_LIMIT:
        raise OverflowError("coordinates too large for the determinant oracle")
    idx = np.array(list(itertools.combinations(range(m), k + 1)), dtype=np.int64)
    for chunk in np.array_split(idx, max(1, len(idx) // 20000)):
        S = others[chunk].astype(float)  # (B, k+1, k)
        M = np.concatenate([S, np.ones(S.shape[:2] + (1,))], axis=2)  # rows (v, 1)
        det = np.rint(np.linalg.det(M))
        ok = det != 0
        if not ok.any():
            continue
        pt = np.append(p.astype(float), 1.0)
        signs = []
        for j in range(k + 1):
            Mj = M.copy()
            Mj[:, j, :] = pt
            signs.append(np.rint(np.linalg.det(Mj)) * np.sign(det))
        lam = np.stack(signs, axis=1)
        hit = ok & (lam >= 0).all(axis=1)
        if hit.any():
            return True
    return False


def hull_vertices_bruteforce(points: Iterable[Sequence]) -> frozenset:
    pts = sorted({tuple(p) for p in points})
    if len(pts) <= 1:
        return frozenset(pts)
    chart = _affine_chart(pts)
    k = len(chart)
    proj = _scaled_integer_rows([[p[i] for i in chart] for p in pts])
    out = []
    for a, p in enumerate(pts):
        others = [q for b, q in enumerate(pts) if b != a]
        # a point outside the affine hull of the others is a vertex
        if rank([sub(q, others[0]) for q in others[1:]] or [[0]]) < k:
            out.append(p)
            continue
        rest = np.delete(proj, a, axis=0)
        if not _inside_any_simplex(proj[a], rest, k):
            out.append(p)
    return frozenset(out)


def hull_oracle_cost(npoints: int, dim: int) -> int:
    """Simplices the oracle may visit over all points of one hull."""
    return npoints * comb(max(npoints - 1, 0), dim + 1)


def facets_bruteforce_cost(m: int, size: int) -> int:
    return comb(m, size)


def fourier_motzkin_feasible(A: Sequence[Sequence], b: Sequence) -> bool:
    """Is ``{x : A x <= b}`` nonempty?  Exact elimination, one variable at
    a time; only for a handful of variables."""
    rows = [([Fraction(a) for a in row], Fraction(rhs)) for row, rhs in zip(A, b)]
    nvar = len(A[0]) if A else 0
    for j in range(nvar):
        pos, neg, rest = [], [], []
        for row, rhs in rows:
            (pos if row[j] > 0 else neg if row[j] < 0 else rest).append((row, rhs))
        for (p, pr), (q, qr) in itertools.product(pos, neg):
            s, t = -q[j], p[j]
            rest.append(([s * x + t * y for x, y in zip(p, q)], s * pr + t * qr))
        rows = _dedup(rest)
    return all(rhs >= 0 for _, rhs in rows)


def _dedup(rows: list) -> list:
    """Normalize rows and keep the tightest right-hand side per direction."""
    best: dict = {}
    for row, rhs in rows:
        scale = next((abs(x) for x in row if x), None)
        if scale is None:
            best[None] = min(best.get(None, rhs), rhs)
            continue
        key = tuple(x / scale for x in row)
        best[key] = min(best.get(key, rhs / scale), rhs / scale)
    out = []
    for key, rhs in best.items():
        row = [Fraction(0)] * len(rows[0][0]) if key is None else list(key)
        out.append((row, rhs))
    return out


def in_hull_fourier_motzkin(p: Sequence, points: Sequence[Sequence]) -> bool:
    """Convex-hull membership through the weights ``lambda >= 0``,
    ``sum lambda = 1``, ``sum lambda v = p``."""
    k = len(points)
    A, b = [], []
    for i in range(k):
        A.append([-1 if j == i else 0 for j in range(k)])
        b.append(0)
    eqs = [([1] * k, 1)] + [([v[d] for v in points], p[d]) for d in range(len(p))]
    for row, rhs in eqs:
        A.append(list(row))
        b.append(rhs)
        A.append([-x for x in row])
        b.append(-rhs)
    return fourier_motzkin_feasible(A, b)
