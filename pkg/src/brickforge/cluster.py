"""Cluster seeds with principal coefficients in finite type.

The extended exchange matrix is ``2n x n``: rows ``0..n-1`` index the
cluster variables, rows ``n..2n-1`` the coefficients.  Cluster variables
live in the Laurent ring with variables ``x1..xn, y1..yn``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .coxeter import RootSystem
from .errors import BudgetExceeded, NonLaurent, NotAMonomial
from .laurent import LaurentExpr
from .polyhedra import VPolytope, hull_vertices

Matrix = tuple  # tuple of row tuples


def variable_names(n: int) -> tuple:
    return tuple(f"x{i}" for i in range(1, n + 1)) + tuple(f"y{i}" for i in range(1, n + 1))


def y_names(n: int) -> tuple:
    return tuple(f"y{i}" for i in range(1, n + 1))


def initial_matrix(R: RootSystem, c: Sequence[int]) -> Matrix:
    """Exchange matrix of the Coxeter word ``c`` stacked on the identity.

    ``m_ij = -a_ij`` when ``i`` comes before ``j`` in ``c`` and ``a_ij``
    when it comes after.  With ``s(a_t) = a_t - a_st a_s`` this is the
    transpose-free convention: column ``k`` drives the exchange of ``x_k``.
    """
    n = R.n
    c = tuple(c)
    if sorted(c) != list(range(1, n + 1)):
        raise ValueError(f"{c} is not a Coxeter word of rank {n}")
    where = {s: k for k, s in enumerate(c)}
    A = R.cartan
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(0)
            elif where[i + 1] < where[j + 1]:
                row.append(-A[i][j])
            else:
                row.append(A[i][j])
        rows.append(tuple(row))
    for i in range(n):
        rows.append(tuple(1 if j == i else 0 for j in range(n)))
    return tuple(rows)


def is_skew_symmetrizable(B: Sequence[Sequence[int]], D: Sequence[int]) -> bool:
    """``D B`` is skew-symmetric for the top square part of ``B``."""
    n = len(D)
    return all(D[i] * B[i][j] == -D[j] * B[j][i] for i in range(n) for j in range(n))


def mutate_matrix(B: Matrix, k: int) -> Matrix:
    """Matrix mutation at the 1-based column ``k``."""
    k -= 1
    out = []
    for i, row in enumerate(B):
        new = []
        for j, b in enumerate(row):
            if i == k or j == k:
                new.append(-b)
            else:
                bik, bkj = row[k], B[k][j]
                if bik > 0 and bkj > 0:
                    new.append(b + bik * bkj)
                elif bik < 0 and bkj < 0:
                    new.append(b - bik * bkj)
                else:
                    new.append(b)
        out.append(tuple(new))
    return tuple(out)


@dataclass(frozen=True)
class Seed:
    matrix: Matrix
    cluster: tuple  # LaurentExpr per column

    @property
    def n(self) -> int:
        return len(self.cluster)

    @classmethod
    def initial(cls, M: Matrix) -> "Seed":
        n = len(M[0])
        names = variable_names(n)
        return cls(tuple(tuple(r) for r in M),
                   tuple(LaurentExpr.variable(i, names) for i in range(n)))

    def key(self) -> frozenset:
        return frozenset(x.key() for x in self.cluster)


def exchange_polynomial(seed: Seed, k: int) -> LaurentExpr:
    """Sum of the two exchange monomials for column ``k`` (1-based)."""
    n = seed.n
    names = variable_names(n)
    plus = LaurentExpr.constant(1, names)
    minus = LaurentExpr.constant(1, names)
    y_plus = [0] * (2 * n)
    y_minus = [0] * (2 * n)
    for i, row in enumerate(seed.matrix):
        b = row[k - 1]
        if not b:
            continue
        if i < n:
            if b > 0:
                plus = plus * seed.cluster[i] ** b
            else:
                minus = minus * seed.cluster[i] ** (-b)
        elif b > 0:
            y_plus[i] = b
        else:
            y_minus[i] = -b
    return plus.shift(y_plus) + minus.shift(y_minus)


def mutate(seed: Seed, k: int) -> Seed:
    """Mutation in direction ``k`` (1-based)."""
    if not 1 <= k <= seed.n:
        raise ValueError(f"direction {k} outside 1..{seed.n}")
    new = exchange_polynomial(seed, k).exact_divide(seed.cluster[k - 1])
    cluster = list(seed.cluster)
    cluster[k - 1] = new
    return Seed(mutate_matrix(seed.matrix, k), tuple(cluster))


@dataclass(frozen=True)
class ClusterVariableRecord:
    expr: LaurentExpr
    d_vector: tuple
    g_vector: tuple
    f_polynomial: Optional[LaurentExpr]  # None for initial variables

    @property
    def is_initial(self) -> bool:
        return self.f_polynomial is None

    @property
    def numerator(self) -> LaurentExpr:
        """``p`` with ``expr = p / x^d``."""
        return self.expr.numerator_denominator()[0]


def d_vector(expr: LaurentExpr) -> tuple:
    n = len(expr.names) // 2
    low = expr.min_exponents()
    return tuple(-low[i] for i in range(n))


def g_vector(expr: LaurentExpr) -> tuple:
    """Exponent of ``expr(x, 0)``, which must be a single monomial."""
    n = len(expr.names) // 2
    at_zero = expr.set_zero(range(n, 2 * n))
    if len(at_zero) != 1:
        raise NotAMonomial(f"{expr} at y=0 has {len(at_zero)} terms")
    (e, c), = at_zero.terms.items()
    if c != 1:
        raise NotAMonomial(f"{expr} at y=0 has coefficient {c}")
    return tuple(e[:n])


def f_polynomial(expr: LaurentExpr) -> LaurentExpr:
    n = len(expr.names) // 2
    return expr.restrict(range(n, 2 * n), y_names(n))


def make_record(expr: LaurentExpr, initial: bool = False) -> ClusterVariableRecord:
    return ClusterVariableRecord(expr, d_vector(expr), g_vector(expr),
                                 None if initial else f_polynomial(expr))


def all_cluster_variables(M: Matrix, max_seeds: int = 100_000) -> list:
    """All cluster variables by breadth-first search over seeds.

    Returns the ``n`` initial records followed by the others sorted by
    d-vector.  Seeds are identified by their set of cluster variables.
    """
    start = Seed.initial(M)
    n = start.n
    variables = {x.key(): x for x in start.cluster}
    seen = {start.key()}
    queue = deque([start])
    while queue:
        seed = queue.popleft()
        for k in range(1, n + 1):
            nxt = mutate(seed, k)
            key = nxt.key()
            if key in seen:
                continue
            seen.add(key)
            if len(seen) > max_seeds:
                raise BudgetExceeded(f"more than {max_seeds} seeds; is the type finite?")
            new = nxt.cluster[k - 1]
            variables.setdefault(new.key(), new)
            queue.append(nxt)
    initial = [make_record(x, initial=True) for x in start.cluster]
    init_keys = {x.key() for x in start.cluster}
    others = [make_record(x) for k, x in variables.items() if k not in init_keys]
    for r in others:
        if not r.expr.is_laurent_positive():
            raise NonLaurent(f"{r.expr} has a non-positive coefficient")
    others.sort(key=lambda r: (sum(r.d_vector), tuple(-x for x in r.d_vector)))
    return initial + others


def records_by_root(records: Sequence[ClusterVariableRecord]) -> dict:
    return {r.d_vector: r for r in records if not r.is_initial}


def cluster_records(R: RootSystem, c: Sequence[int]) -> list:
    return all_cluster_variables(initial_matrix(R, c))


# F-polynomial geometry

def newton_polytope(f: LaurentExpr) -> VPolytope:
    if not f.terms:
        raise ValueError("the zero polynomial has no Newton polytope")
    return hull_vertices(f.terms)


def check_extremal_exponents(f: LaurentExpr, beta: Sequence[int]) -> bool:
    """Constant term 1 and ``beta`` the unique componentwise maximal exponent."""
    beta = tuple(beta)
    if f.coefficient((0,) * len(beta)) != 1 or f.coefficient(beta) == 0:
        return False
    return all(all(a <= b for a, b in zip(e, beta)) for e in f.terms)


def separation_formula(record: ClusterVariableRecord, M: Matrix) -> LaurentExpr:
    """Rebuild a cluster variable as ``x^g F(y_hat) / F(y_hat)|_trop``.

    With principal coefficients the tropical denominator is 1, so the
    variable equals ``x^g F(y_hat)`` where ``y_hat_j = y_j prod_i x_i^{b_ij}``.
    Used as an independent check on mutation.
    """
    f = record.f_polynomial
    n = len(record.g_vector)
    names = variable_names(n)
    if f is None:
        return LaurentExpr.monomial(tuple(record.g_vector) + (0,) * n, names)
    out: dict = {}
    for e, coeff in f.terms.items():
        x = list(record.g_vector)
        for j, ej in enumerate(e):
            for i in range(n):
                x[i] += M[i][j] * ej
        key = tuple(x) + tuple(e)
        out[key] = out.get(key, 0) + coeff
    return LaurentExpr(out, names)
