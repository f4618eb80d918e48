"""Tropicalization of the graph parametrization of a finite type cluster algebra.

Weights on the initial variables ``X_D u Y`` are vectors of length ``2n``
(``x1..xn`` then ``y1..yn``).  Weights on all of ``X u Y`` have length
``2n + N`` ordered as ``x1..xn``, one ``x_beta`` per positive root, then
``y1..yn``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .cluster import ClusterVariableRecord, newton_polytope, records_by_root
from .errors import IndexMismatch, SampleEscapedCone
from .linalg import add, dot, scale, zero
from .polyhedra import Fan, hull_vertices


@dataclass(frozen=True)
class GeneratorPolynomial:
    """``x_beta x^beta - p_beta`` split by coefficient sign."""
    beta: tuple
    positive_part: tuple
    negative_part: tuple  # sorted exponent vectors over X u Y


@dataclass(frozen=True)
class TropMap:
    roots: tuple  # positive roots, in coordinate order
    exponents: Mapping  # beta -> sorted tuple of exponents over X_D u Y
    n: int

    def __len__(self):
        return len(self.roots)


def _numerators(records: Sequence[ClusterVariableRecord]) -> dict:
    return {beta: rec.numerator for beta, rec in records_by_root(records).items()}


def build_trop_map(records: Sequence[ClusterVariableRecord],
                   order: Optional[Sequence] = None) -> TropMap:
    nums = _numerators(records)
    roots = tuple(order) if order is not None else tuple(nums)
    n = len(roots[0]) if roots else len(records[0].d_vector)
    return TropMap(roots, {b: tuple(sorted(nums[b].terms)) for b in roots}, n)


def build_generators(records: Sequence[ClusterVariableRecord],
                     order: Optional[Sequence] = None) -> list:
    tmap = build_trop_map(records, order)
    n, N = tmap.n, len(tmap)
    out = []
    for k, beta in enumerate(tmap.roots):
        pos = list(beta) + [0] * N + [0] * n
        pos[n + k] = 1
        neg = tuple(sorted(tuple(e[:n]) + (0,) * N + tuple(e[n:]) for e in tmap.exponents[beta]))
        out.append(GeneratorPolynomial(beta, tuple(pos), neg))
    return out


def argmax_set(E: Sequence[Sequence], w: Sequence) -> tuple:
    """``(max value, sorted maximizers)`` of ``e . w`` over ``E``."""
    best = None
    arg: list = []
    for e in E:
        v = dot(e, w)
        if best is None or v > best:
            best, arg = v, [tuple(e)]
        elif v == best:
            arg.append(tuple(e))
    return best, tuple(sorted(arg))


def trop_eval(tmap: TropMap, w: Sequence) -> tuple:
    """Values and argmax signature of every coordinate function at ``w``."""
    w = tuple(Fraction(x) for x in w)
    if len(w) != 2 * tmap.n:
        raise IndexMismatch(f"expected {2 * tmap.n} coordinates, got {len(w)}")
    wx = w[:tmap.n]
    values, signature = {}, {}
    for beta in tmap.roots:
        top, arg = argmax_set(tmap.exponents[beta], w)
        values[beta] = top - dot(wx, beta)
        signature[beta] = arg
    return values, signature


def graph_point(tmap: TropMap, w: Sequence) -> tuple:
    """The image of ``w`` under the tropical parametrization, over ``X u Y``."""
    values, _ = trop_eval(tmap, w)
    n = tmap.n
    return tuple(w[:n]) + tuple(values[b] for b in tmap.roots) + tuple(w[n:])


def is_on_positive_hypersurface(g: GeneratorPolynomial, w: Sequence) -> bool:
    """The maximum over all monomials of ``g`` is attained on both signs."""
    if len(w) != len(g.positive_part):
        raise IndexMismatch(f"expected {len(g.positive_part)} coordinates, got {len(w)}")
    p = dot(g.positive_part, w)
    top = max(dot(e, w) for e in g.negative_part)
    return p == top


# slice comparison with the g-vector fan

@dataclass
class SliceReport:
    projection: dict = field(default_factory=dict)  # beta -> bool
    constancy: dict = field(default_factory=dict)  # cone -> bool
    signatures: dict = field(default_factory=dict)  # cone -> signature key
    cones: int = 0
    distinct: int = 0

    @property
    def projection_ok(self) -> bool:
        return all(self.projection.values())

    @property
    def constancy_ok(self) -> bool:
        return all(self.constancy.values())

    @property
    def separation_ok(self) -> bool:
        return self.distinct == self.cones

    @property
    def passed(self) -> bool:
        return self.projection_ok and self.constancy_ok and self.separation_ok

    def witness(self) -> Optional[str]:
        for b, ok in self.projection.items():
            if not ok:
                return f"projection mismatch at {b}"
        for cone, ok in self.constancy.items():
            if not ok:
                return f"signature not constant on cone {cone}"
        if not self.separation_ok:
            return f"{self.distinct} distinct signatures for {self.cones} cones"
        return None


def _signature_key(signature: Mapping) -> tuple:
    return tuple(sorted(signature.items()))


def cone_samples(fan: Fan, cone_index: int, count: int, rng: random.Random,
                 retries: int = 5) -> list:
    """The sum of the cone's rays, then ``count`` perturbed interior points.

    A perturbation scales each ray by ``1 + t`` with ``|t| < eps``; each
    point is verified to lie in the open cone and retried with a halved
    ``eps`` if it does not.
    """
    cone = fan.maximal_cones[cone_index]
    rays = [fan.rays[i] for i in cone]
    base = zero(len(rays[0]))
    for r in rays:
        base = add(base, r)
    out = [base]
    for _ in range(count):
        eps = Fraction(1, 2)
        for _attempt in range(retries):
            p = zero(len(base))
            for r in rays:
                t = Fraction(rng.randint(-999, 999), 1000) * eps
                p = add(p, scale(1 + t, r))
            coeffs = fan.cone_coefficients(cone_index, p)
            if coeffs is not None and all(a > 0 for a in coeffs):
                out.append(p)
                break
            eps /= 2
        else:
            raise SampleEscapedCone(f"could not sample inside cone {cone}")
    return out


def projection_check(tmap: TropMap, records: Sequence[ClusterVariableRecord]) -> dict:
    """The y-projection of each ``E_beta`` is the support of ``F_beta`` and
    the two Newton polytopes agree."""
    n = tmap.n
    by_root = records_by_root(records)
    out = {}
    for beta in tmap.roots:
        proj = {tuple(e[n:]) for e in tmap.exponents[beta]}
        f = by_root[beta].f_polynomial
        ok = proj == set(f.terms) and hull_vertices(proj) == newton_polytope(f)
        out[beta] = ok
    return out


def verify_slice_isomorphism(tmap: TropMap, records: Sequence[ClusterVariableRecord],
                             fan: Fan, seed: int = 0, samples: int = 8) -> SliceReport:
    """Compare argmax signatures on the ``x = 0`` slice with the cones of ``fan``.

    The fan must be given in coweight coordinates, so that a ray pairs
    with root-coordinate exponents by the plain dot product.
    """
    rng = random.Random(seed)
    rep = SliceReport(projection=projection_check(tmap, records))
    n = tmap.n
    seen: dict = {}
    for ci, cone in enumerate(fan.maximal_cones):
        keys = set()
        for p in cone_samples(fan, ci, samples, rng):
            _, sig = trop_eval(tmap, (0,) * n + tuple(p))
            keys.add(_signature_key(sig))
        rep.constancy[cone] = len(keys) == 1
        key = min(keys)
        rep.signatures[cone] = key
        seen.setdefault(key, cone)
    rep.cones = len(fan.maximal_cones)
    rep.distinct = len(seen)
    return rep


def is_homogeneous_at(tmap: TropMap, w: Sequence, lam: Fraction) -> bool:
    v1, s1 = trop_eval(tmap, w)
    v2, s2 = trop_eval(tmap, [lam * x for x in w])
    return s1 == s2 and all(v2[b] == lam * v1[b] for b in tmap.roots)


def format_coordinate_function(tmap: TropMap, beta: Sequence) -> str:
    """Render ``Trop Psi_beta`` as ``max(...) - offset``."""
    names = [f"x{i}" for i in range(1, tmap.n + 1)] + [f"y{i}" for i in range(1, tmap.n + 1)]
    beta = tuple(beta)

    def linear(e):
        parts = []
        for name, k in zip(names, e):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{k}{name}")
        return " + ".join(parts) or "0"

    order = sorted(tmap.exponents[beta], key=lambda e: (-sum(e), tuple(-x for x in e)))
    terms = ", ".join(linear(e) for e in order)
    offset = " - ".join(linear([b if i == j else 0 for j in range(2 * tmap.n)])
                        for i, b in enumerate(beta) if b)
    return f"max({terms}) - {offset}"


def coordinate_function_structure(tmap: TropMap, beta: Sequence) -> tuple:
    """``(set of max exponents, subtracted linear form)`` over ``(x, y)``."""
    beta = tuple(beta)
    offset = beta + (0,) * tmap.n
    return frozenset(tuple(e) for e in tmap.exponents[beta]), offset


_LINEAR_TERM = re.compile(r"^(\d*)\s*([xy])_?\{?(\d+)\}?$")


def _parse_linear(text: str, n: int) -> tuple:
    out = [0] * (2 * n)
    text = text.replace(" ", "")
    if text in ("", "0"):
        return tuple(out)
    for tok in text.split("+"):
        m = _LINEAR_TERM.match(tok)
        if m is None:
            raise ValueError(f"cannot read linear term {tok!r}")
        coeff = int(m.group(1) or 1)
        i = int(m.group(3)) - 1 + (n if m.group(2) == "y" else 0)
        out[i] += coeff
    return tuple(out)


def parse_max_expression(text: str, n: int) -> tuple:
    """Read ``max(a, b, ...) - c - d`` (plain or TeX-formatted) into the
    form returned by :func:`coordinate_function_structure`."""
    s = text.replace("\\max", "max").replace("\\,", " ")
    m = re.match(r"^\s*max\((.*)\)\s*(.*)$", s)
    if m is None:
        raise ValueError(f"not a max-expression: {text!r}")
    args = [a for a in m.group(1).split(",")]
    rest = m.group(2).strip()
    if not rest.startswith("-"):
        raise ValueError(f"expected a subtracted linear form in {text!r}")
    offset = [0] * (2 * n)
    for tok in rest[1:].split("-"):
        offset = [a + b for a, b in zip(offset, _parse_linear(tok, n))]
    return frozenset(_parse_linear(a, n) for a in args), tuple(offset)
