"""Exact V-polytopes, simplicial fans, height vectors and type-cone tests."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import (CountMismatch, DimensionMismatch, NotAVertex, RayAmbiguous,
                     SingularCone)
from .linalg import add, dot, inverse, mat_vec, rank, transpose, vec
from .lp import OPTIMAL, linprog

_CERT_SEED = 20201216


@dataclass(frozen=True)
class VPolytope:
    """A polytope given by its vertices, lexicographically sorted."""

    vertices: tuple

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v):
        return tuple(v) in self.vertices

    @classmethod
    def point(cls, v) -> "VPolytope":
        return cls((vec(v),))


def _check_dims(points):
    dims = {len(p) for p in points}
    if len(dims) > 1:
        raise DimensionMismatch(f"points of dimensions {sorted(dims)}")


def in_convex_hull(p: Sequence, points: Sequence[Sequence]) -> bool:
    """Is ``p`` a convex combination of ``points``?  Decided by an exact LP."""
    if not points:
        return False
    d = len(p)
    k = len(points)
    A = [[q[i] for q in points] for i in range(d)] + [[1] * k]
    b = list(p) + [1]
    return linprog([0] * k, A_eq=A, b_eq=b).status == OPTIMAL


def _certified_vertices(points: list, rng: random.Random) -> set:
    """Points that uniquely maximize some integer linear functional."""
    d = len(points[0])
    found = set()
    directions = [tuple(int(i == j) * s for j in range(d)) for i in range(d) for s in (1, -1)]
    directions += [tuple(rng.randint(-997, 997) for _ in range(d)) for _ in range(4 * d + 8)]
    for f in directions:
        vals = [dot(f, p) for p in points]
        for best in (max(vals), min(vals)):
            idx = [i for i, v in enumerate(vals) if v == best]
            if len(idx) == 1:
                found.add(idx[0])
    return found


def hull_vertices(points: Iterable[Sequence]) -> VPolytope:
    """Vertices of the convex hull of a finite point set."""
    pts = sorted({vec(p) for p in points})
    if not pts:
        raise ValueError("empty point set")
    _check_dims(pts)
    if len(pts) <= 2:
        return VPolytope(tuple(pts))
    cert = _certified_vertices(pts, random.Random(_CERT_SEED))
    verts = set(cert)
    cert_pts = [pts[i] for i in sorted(cert)]
    for i, p in enumerate(pts):
        if i in verts:
            continue
        if cert_pts and in_convex_hull(p, cert_pts):
            continue
        others = pts[:i] + pts[i + 1:]
        if not in_convex_hull(p, others):
            verts.add(i)
            cert_pts.append(p)
    return VPolytope(tuple(pts[i] for i in sorted(verts)))


def minkowski_sum(*polys: VPolytope) -> VPolytope:
    if not polys:
        raise ValueError("need at least one summand")
    dims = {P.dim for P in polys}
    if len(dims) > 1:
        raise DimensionMismatch(f"summands of dimensions {sorted(dims)}")
    acc = [polys[0].vertices[0]] if len(polys[0]) == 1 else list(polys[0].vertices)
    for P in polys[1:]:
        acc = hull_vertices(add(u, v) for u in acc for v in P.vertices).vertices
    return hull_vertices(acc)


def is_edge(P: VPolytope, u: Sequence, v: Sequence) -> bool:
    """Is some linear functional maximized on ``P`` exactly at ``{u, v}``?"""
    u, v = vec(u), vec(v)
    for x in (u, v):
        if x not in P:
            raise NotAVertex(f"{x} is not a vertex")
    if u == v:
        return False
    d = P.dim
    others = [w for w in P.vertices if w not in (u, v)]
    if not others:
        return True
    # c.(u - v) = 0 and c.(w - u) <= -1 for every other vertex w
    A_eq = [[a - b for a, b in zip(u, v)]]
    A_ub = [[a - b for a, b in zip(w, u)] for w in others]
    res = linprog([0] * d, A_ub=A_ub, b_ub=[-1] * len(others),
                  A_eq=A_eq, b_eq=[0], free=[True] * d)
    return res.status == OPTIMAL


def support_value(f: Sequence, points: Iterable[Sequence]):
    return max(dot(f, p) for p in points)


# fans


@dataclass(frozen=True)
class Fan:
    """A simplicial fan: ray generators as rows and maximal cones as
    sorted tuples of ray indices (0-based).

    ``rays`` act as linear functionals on the ambient coordinates by the
    plain dot product.
    """

    rays: tuple
    maximal_cones: tuple
    labels: tuple = field(default=())

    @property
    def dim(self) -> int:
        return len(self.rays[0])

    @cached_property
    def cone_inverses(self) -> tuple:
        """For each cone, the inverse of its ray matrix (rows = rays)."""
        out = []
        for cone in self.maximal_cones:
            inv = inverse([self.rays[r] for r in cone])
            if inv is None:
                raise SingularCone(f"cone {cone} is not simplicial")
            out.append(inv)
        return tuple(out)

    def validate(self):
        used = set()
        for cone in self.maximal_cones:
            if len(cone) != self.dim or rank([self.rays[r] for r in cone]) != self.dim:
                raise SingularCone(f"cone {cone} is not a full-dimensional simplicial cone")
            used.update(cone)
        if used != set(range(len(self.rays))):
            raise ValueError("every ray must lie in some maximal cone")

    def cone_coefficients(self, k: int, point: Sequence) -> tuple:
        """Coefficients of ``point`` in the rays of cone ``k``."""
        inv = self.cone_inverses[k]
        # point = sum lambda_r ray_r  <=>  lambda = point . inv
        return mat_vec(transpose(inv), point)

    def cones_containing(self, point: Sequence, interior: bool = False) -> list:
        out = []
        for k in range(len(self.maximal_cones)):
            lam = self.cone_coefficients(k, point)
            if all(x > 0 for x in lam) if interior else all(x >= 0 for x in lam):
                out.append(k)
        return out

    def cone_interior_point(self, k: int) -> tuple:
        pt = tuple(0 for _ in range(self.dim))
        for r in self.maximal_cones[k]:
            pt = add(pt, self.rays[r])
        return pt

    def completeness_check(self, samples: int = 1000, seed: int = 0) -> bool:
        """Deterministic interior points plus seeded random samples."""
        for k in range(len(self.maximal_cones)):
            if self.cones_containing(self.cone_interior_point(k), interior=True) != [k]:
                return False
        rng = random.Random(seed)
        for _ in range(samples):
            pt = tuple(Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 1000))
                       for _ in range(self.dim))
            if not self.cones_containing(pt):
                return False
        return True


def g_vector_fan(sc) -> Fan:
    """The fan with one ray per position of a cluster word and one maximal
    cone per facet.

    The ray of position ``p`` is the common weight ``w(I, p)`` of the facets
    containing ``p``, written in coweight coordinates so that it pairs with
    root coordinates through the invariant inner product.
    """
    R = sc.R
    weight_of = {}
    for I in sc.facets():
        for p in I:
            w = sc.weight_function(I, p)
            prev = weight_of.setdefault(p, w)
            if prev != w:
                raise RayAmbiguous(f"position {p}: {prev} vs {w}")
    positions = sorted(weight_of)
    index = {p: i for i, p in enumerate(positions)}
    rays = tuple(R.coweight_coords(weight_of[p]) for p in positions)
    cones = tuple(tuple(index[p] for p in I) for I in sc.facets())
    fan = Fan(rays, cones, tuple(positions))
    fan.validate()
    return fan


def g_fan_weights(sc) -> dict:
    """Position -> ray weight in fundamental-weight coordinates."""
    out = {}
    for I in sc.facets():
        for p in I:
            out.setdefault(p, sc.R.weight_coords(sc.weight_function(I, p)))
    return dict(sorted(out.items()))


# height vectors and the type cone


def support_heights(P: VPolytope | Iterable, fan: Fan) -> tuple:
    """Support function of ``P`` evaluated at every ray of ``fan``."""
    pts = P.vertices if isinstance(P, VPolytope) else list(P)
    return vec(support_value(r, pts) for r in fan.rays)


class HeightRealization(NamedTuple):
    polytope: VPolytope
    in_type_cone: bool
    cone_points: tuple  # one point per maximal cone
    deformation: bool = False  # every cone point satisfies all inequalities


def polytope_from_heights(fan: Fan, h: Sequence) -> HeightRealization:
    """Solve ``<ray, x> = h_ray`` on every maximal cone.

    ``h`` lies in the open type cone exactly when each cone solution
    satisfies every other ray inequality strictly.  When they all hold
    non-strictly the polytope ``{<ray, x> <= h_ray}`` has exactly the
    distinct cone solutions as vertices (the fan is complete), so no hull
    computation is needed.
    """
    h = vec(h)
    if len(h) != len(fan.rays):
        raise DimensionMismatch(f"{len(h)} heights for {len(fan.rays)} rays")
    points = []
    strict = feasible = True
    for k, cone in enumerate(fan.maximal_cones):
        inv = fan.cone_inverses[k]
        x = mat_vec(inv, [h[r] for r in cone])
        points.append(x)
        if feasible:
            members = set(cone)
            for r, ray in enumerate(fan.rays):
                if r in members:
                    continue
                v = dot(ray, x)
                if v > h[r]:
                    strict = feasible = False
                    break
                if v == h[r]:
                    strict = False
    if feasible:
        poly = VPolytope(tuple(sorted(set(points))))
    else:
        poly = hull_vertices(points)
    return HeightRealization(poly, strict, tuple(points), feasible)


def decomposes_on_fan(fan: Fan, summand_heights: Sequence[Sequence], summands: Sequence[VPolytope],
                      target_heights: Sequence, target: VPolytope) -> Optional[str]:
    """Check ``target == sum(summands)`` through their shared normal fan.

    On each maximal cone the face of a polytope maximising a generic
    functional from that cone is the cone solution of its heights.  If every
    such point is a vertex of its polytope and the solutions add up on every
    cone, the support functions agree on a complete fan and the Minkowski
    sum equals ``target``.  Returns a description of the first failure.
    """
    parts = [(polytope_from_heights(fan, h), P) for h, P in zip(summand_heights, summands)]
    whole = polytope_from_heights(fan, target_heights)
    for real, P in parts + [(whole, target)]:
        if not real.deformation:
            return "heights outside the deformation cone"
        if real.polytope != P:
            return f"cone points {sorted(real.polytope.vertices)} differ from {sorted(P.vertices)}"
    d = fan.dim
    for k in range(len(fan.maximal_cones)):
        total = tuple(sum(real.cone_points[k][i] for real, _ in parts) for i in range(d))
        if total != whole.cone_points[k]:
            return f"cone {fan.maximal_cones[k]}: {total} vs {whole.cone_points[k]}"
    return None


@dataclass
class TypeConeReport:
    rank: int
    expected_rank: int
    interior: bool
    boundary: list  # per summand: (in_type_cone, distinct cone points, vertices)
    facets: int

    @property
    def passed(self) -> bool:
        return (self.rank == self.expected_rank and self.interior
                and all(not inside and nverts < self.facets
                        for inside, _, nverts in self.boundary))


def type_cone_simplicial_check(fan: Fan, summand_heights: Sequence[Sequence]) -> TypeConeReport:
    """Check the simplicial-cone criterion for a family of summands.

    (a) the heights together with the columns of the ray matrix span
    the full space; (b) their sum is in the open type cone; (c) dropping
    any one summand leaves the open type cone and loses vertices.
    """
    m = len(fan.rays)
    d = fan.dim
    if len(summand_heights) != m - d:
        raise CountMismatch(f"expected {m - d} height vectors, got {len(summand_heights)}")
    hs = [vec(h) for h in summand_heights]
    cols = [tuple(ray[j] for ray in fan.rays) for j in range(d)]
    r = rank(hs + cols)
    total = tuple(sum(h[i] for h in hs) for i in range(m))
    interior = polytope_from_heights(fan, total).in_type_cone
    boundary = []
    for h in hs:
        rest = tuple(a - b for a, b in zip(total, h))
        real = polytope_from_heights(fan, rest)
        boundary.append((real.in_type_cone, len(set(real.cone_points)), len(real.polytope)))
    return TypeConeReport(r, m, interior, boundary, len(fan.maximal_cones))


# serialization


def _fmt(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_vector(v: Sequence) -> str:
    return " ".join(_fmt(x) for x in v)


def parse_vector(line: str) -> tuple:
    return vec(Fraction(tok) for tok in line.split())


def polytope_to_text(P: VPolytope) -> str:
    return "".join(format_vector(v) + "\n" for v in P.vertices)


def polytope_from_text(text: str) -> VPolytope:
    verts = [parse_vector(line) for line in text.splitlines() if line.strip()]
    return VPolytope(tuple(sorted(verts)))


def polytope_to_json(P: VPolytope) -> str:
    return json.dumps({"vertices": [[_fmt(x) for x in v] for v in P.vertices]})


def polytope_from_json(text: str) -> VPolytope:
    data = json.loads(text)
    return VPolytope(tuple(sorted(vec(Fraction(x) for x in v) for v in data["vertices"])))


def fan_to_text(fan: Fan) -> str:
    lines = ["rays"] + [format_vector(r) for r in fan.rays]
    lines += ["cones"] + [" ".join(str(i) for i in c) for c in fan.maximal_cones]
    return "\n".join(lines) + "\n"


def fan_from_text(text: str) -> Fan:
    rays, cones, mode = [], [], None
    for line in text.splitlines():
        line = line.strip()
        if line in ("rays", "cones"):
            mode = line
        elif line:
            if mode == "rays":
                rays.append(parse_vector(line))
            else:
                cones.append(tuple(int(t) for t in line.split()))
    return Fan(tuple(rays), tuple(cones))


def fan_to_json(fan: Fan) -> str:
    return json.dumps({"rays": [[_fmt(x) for x in r] for r in fan.rays],
                       "maximal_cones": [list(c) for c in fan.maximal_cones]})


def fan_from_json(text: str) -> Fan:
    data = json.loads(text)
    rays = tuple(vec(Fraction(x) for x in r) for r in data["rays"])
    return Fan(rays, tuple(tuple(c) for c in data["maximal_cones"]))
