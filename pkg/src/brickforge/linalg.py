"""Exact rational linear algebra on lists of rows."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def normalize(x):
    """Return ints for integral fractions so vectors compare and print cleanly."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def vec(xs) -> tuple:
    return tuple(normalize(x) for x in xs)


def add(u, v) -> tuple:
    return tuple(normalize(a + b) for a, b in zip(u, v))


def sub(u, v) -> tuple:
    return tuple(normalize(a - b) for a, b in zip(u, v))


def scale(c, u) -> tuple:
    return tuple(normalize(c * a) for a in u)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def zero(n: int) -> tuple:
    return (0,) * n


def row_echelon(rows: Sequence[Sequence]) -> list:
    """Reduced row echelon form (nonzero rows only)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    pivot_row = 0
    for col in range(ncols):
        piv = next((r for r in range(pivot_row, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[pivot_row], m[piv] = m[piv], m[pivot_row]
        p = m[pivot_row][col]
        m[pivot_row] = [x / p for x in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return m[:pivot_row]


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_echelon(rows))


def solve(a: Sequence[Sequence], b: Sequence):
    """Solve the square system ``a x = b``; None if ``a`` is singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return vec(row[n] for row in m)


def inverse(a: Sequence[Sequence]):
    """Exact inverse; None if singular."""
    n = len(a)
    cols = []
    for j in range(n):
        e = [int(i == j) for i in range(n)]
        x = solve(a, e)
        if x is None:
            return None
        cols.append(x)
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def mat_vec(m, v) -> tuple:
    return tuple(normalize(sum(a * b for a, b in zip(row, v))) for row in m)


def transpose(m) -> tuple:
    return tuple(zip(*m))


def determinant(rows: Sequence[Sequence]) -> Fraction:
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det
