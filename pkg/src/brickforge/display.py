"""Tables of root, weight and cluster data, and ambient-coordinate display.

Vectors are kept in root coordinates everywhere else; this module only
converts for printing.  The ambient forms are the classical ones: for
``A_n`` the sum-zero hyperplane of ``R^{n+1}`` (weights shifted to have
minimum entry 0) and for ``B2`` the lattice with ``a1 = (2,-2)``,
``a2 = (0,2)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .brick import BrickGeometry
from .cluster import ClusterVariableRecord, records_by_root
from .coxeter import RootSystem
from .linalg import normalize

_B2_AMBIENT = ((2, -2), (0, 2))


def has_ambient(R: RootSystem) -> bool:
    t = R.cartan_type
    return t is not None and (t.family == "A" or (t.family == "B" and t.rank == 2))


def ambient(R: RootSystem, v: Sequence, weight: bool = False) -> tuple:
    """Ambient coordinates of a root-coordinate vector.

    With ``weight=True`` an ``A_n`` vector is translated along ``(1,..,1)``
    so that its smallest entry is 0.
    """
    t = R.cartan_type
    if t is None or not has_ambient(R):
        raise ValueError(f"no ambient form for {R!r}")
    if t.family == "A":
        out = [Fraction(0)] * (t.rank + 1)
        for i, c in enumerate(v):
            out[i] += c
            out[i + 1] -= c
        if weight:
            low = min(out)
            out = [x - low for x in out]
        return tuple(normalize(x) for x in out)
    x = sum(c * a[0] for c, a in zip(v, _B2_AMBIENT))
    y = sum(c * a[1] for c, a in zip(v, _B2_AMBIENT))
    return (normalize(x), normalize(y))


# formatting

def fmt_num(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fmt_vec(v: Sequence) -> str:
    return ",".join(fmt_num(x) for x in v)


def fmt_facet(I: Sequence[int]) -> str:
    if all(k < 10 for k in I):
        return "".join(map(str, I))
    return "{" + ",".join(map(str, I)) + "}"


def digit_string(v: Sequence) -> str:
    """Compact form ``1-100`` for small integer vectors, else comma form."""
    if all(Fraction(x).denominator == 1 and -9 <= x <= 9 for x in v):
        return "".join(str(int(x)) for x in v)
    return fmt_vec(v)


# tables; every row is a list of cells

def root_table(bg: BrickGeometry) -> list:
    sc = bg.sc
    header = ["facet"] + [str(k) for k in range(1, sc.m + 1)]
    rows = [[fmt_facet(I)] + [fmt_vec(r) for r in sc.roots(I)] for I in bg.facets]
    return [header] + rows


def weight_table(bg: BrickGeometry) -> list:
    sc = bg.sc
    header = ["facet"] + [str(k) for k in range(1, sc.m + 1)]
    rows = [[fmt_facet(I)] + [fmt_vec(w) for w in sc.weights(I)] for I in bg.facets]
    return [header] + rows


def shifted_weight_table(bg: BrickGeometry) -> list:
    sc = bg.sc
    positions = range(sc.n + 1, sc.n + sc.N + 1)
    header = ["facet"] + [str(k) for k in positions] + ["brick"]
    rows = [[fmt_facet(I)] + [fmt_vec(w) for w in ws] + [fmt_vec(b)]
            for I, ws, b in bg.shifted_weight_table()]
    return [header] + rows


def cluster_order(bg: BrickGeometry, records: Sequence[ClusterVariableRecord]) -> list:
    """Initial variables, then the others in position order ``n+1..n+N``."""
    by_root = records_by_root(records)
    initial = [r for r in records if r.is_initial]
    return initial + [by_root[b] for b in bg.positive_roots]


def cluster_table(bg: BrickGeometry, records: Sequence[ClusterVariableRecord]) -> list:
    header = ["variable", "expression", "d", "g", "F"]
    rows = []
    for k, rec in enumerate(cluster_order(bg, records), start=1):
        f = "" if rec.f_polynomial is None else rec.f_polynomial.format_polynomial()
        rows.append([f"x{k}", str(rec.expr), fmt_vec(rec.d_vector), fmt_vec(rec.g_vector), f])
    return [header] + rows


def to_tsv(table: Sequence[Sequence[str]]) -> str:
    return "".join("\t".join(row) + "\n" for row in table)
