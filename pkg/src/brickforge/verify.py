"""Verification drivers: one function per check, each returning a
:class:`CheckResult`.  The command line and the acceptance tests share them."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Optional, Sequence

from . import fixtures as fx
from .brick import BrickGeometry
from .cluster import (check_extremal_exponents, cluster_records, initial_matrix,
                      newton_polytope, records_by_root, separation_formula)
from .coxeter import RootSystem, format_word
from .display import ambient, cluster_order, has_ambient
from .errors import BrickforgeError
from .linalg import rank, sub
from .oracles import facets_bruteforce_cost, hull_oracle_cost, hull_vertices_bruteforce
from .polyhedra import (decomposes_on_fan, g_fan_weights, g_vector_fan, hull_vertices, is_edge,
                        minkowski_sum, support_heights, type_cone_simplicial_check)
from .subword import SubwordComplex
from .tropical import (build_generators, build_trop_map, coordinate_function_structure,
                       format_coordinate_function, graph_point, is_homogeneous_at,
                       is_on_positive_hypersurface, parse_max_expression, verify_slice_isomorphism)
from .words import word_report

PASS = "pass"
FAIL = "fail"
ORACLE_BUDGET = 10 ** 6


@dataclass
class CheckResult:
    type: str
    coxeter_word: str
    check: str
    status: str
    witness: Optional[str] = None
    millis: int = 0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def record(self) -> dict:
        return {"type": self.type, "coxeter_word": self.coxeter_word, "check": self.check,
                "status": self.status, "witness": self.witness, "millis": self.millis}


class Instance:
    """Lazily computed data for one (type, Coxeter word) pair."""

    def __init__(self, type_name: str, c: Sequence[int]):
        self.type_name = type_name
        self.R = RootSystem(type_name)
        self.c = tuple(c)

    @property
    def word(self) -> str:
        return format_word(self.c)

    @cached_property
    def sc(self) -> SubwordComplex:
        return SubwordComplex.cluster(self.R, self.c)

    @cached_property
    def bg(self) -> BrickGeometry:
        return BrickGeometry(self.sc)

    @cached_property
    def records(self) -> list:
        return cluster_records(self.R, self.c)

    @cached_property
    def by_root(self) -> dict:
        return records_by_root(self.records)

    @cached_property
    def fan(self):
        return g_vector_fan(self.sc)

    @cached_property
    def trop_map(self):
        return build_trop_map(self.records, self.bg.positive_roots)


def timed(check: str, inst: Optional[Instance], fn: Callable[[], tuple],
          timing: bool = True) -> CheckResult:
    """Run ``fn() -> (ok, witness, details)``; errors become failures."""
    t0 = time.perf_counter()
    try:
        ok, witness, details = fn()
    except BrickforgeError as exc:
        ok, witness, details = False, f"{type(exc).__name__}: {exc}", {}
    ms = int(round((time.perf_counter() - t0) * 1000)) if timing else 0
    return CheckResult(inst.type_name if inst else "-", inst.word if inst else "-", check,
                       PASS if ok else FAIL, witness, ms, details)


# tables against the shipped reference data

_TABLE_FIXTURES = {("A3", (1, 2, 3)): "a3", ("B2", (1, 2)): "b2"}


def _erratum_matches(name, key, computed, decode, directory) -> bool:
    e = fx.erratum_for(name, key, directory)
    return e is not None and decode(e.corrected) == computed


def table_diffs(inst: Instance, directory=None) -> tuple:
    """``(diffs, errata_used, cells_compared)`` against the reference tables."""
    prefix = _TABLE_FIXTURES.get((inst.type_name, inst.c))
    if prefix is None:
        return [], [], 0
    R, sc, bg = inst.R, inst.sc, inst.bg
    diffs, used, cells = [], [], 0

    for kind in ("roots", "weights"):
        name = f"{prefix}_{kind}.tsv"
        rows = fx.load_tsv(name, directory)
        if [fx.decode_facet(r["facet"]) for r in rows] != bg.facets:
            diffs.append(f"{name}: facet list differs")
            continue
        for r in rows:
            I = fx.decode_facet(r["facet"])
            for k in range(1, sc.m + 1):
                v = sc.root_function(I, k) if kind == "roots" else sc.weight_function(I, k)
                got = ambient(R, v, weight=(kind == "weights"))
                cells += 1
                if got == fx.decode_digits(r[str(k)]):
                    continue
                key = f"{r['facet']}/{k}"
                if _erratum_matches(name, key, got, fx.decode_digits, directory):
                    used.append(f"{name}:{key}")
                else:
                    diffs.append(f"{name}: row {r['facet']} position {k}: {got}")

    name = f"{prefix}_shifted.tsv"
    rows = fx.load_tsv(name, directory)
    for r, (I, ws, brick) in zip(rows, bg.shifted_weight_table()):
        if fx.decode_facet(r["facet"]) != I:
            diffs.append(f"{name}: facet {r['facet']} out of order")
            continue
        cols = [(str(k), w) for k, w in zip(range(sc.n + 1, sc.n + sc.N + 1), ws)]
        for col, v in cols + [("brick", brick)]:
            cells += 1
            if fx.split_pair(r[col]) != (ambient(R, v), v):
                diffs.append(f"{name}: row {r['facet']} column {col}: {v}")
    if len(rows) != len(bg.facets):
        diffs.append(f"{name}: {len(rows)} rows for {len(bg.facets)} facets")

    rows = fx.cluster_rows(inst.type_name, directory)
    recs = cluster_order(bg, inst.records)
    if len(rows) != len(recs):
        diffs.append(f"cluster table: {len(rows)} rows for {len(recs)} variables")
    for row, rec in zip(rows, recs):
        for label, a, b in (("expression", row.expr, rec.expr), ("d", row.d_vector, rec.d_vector),
                            ("g", row.g_vector, rec.g_vector), ("F", row.f_polynomial, rec.f_polynomial)):
            cells += 1
            if a != b:
                diffs.append(f"cluster {row.label} {label}: {b}")
        cells += 1
        g_root = R.root_coords(rec.g_vector)
        if row.g_root != g_root:
            key = f"{inst.type_name}/{row.label}/g_root"
            if _erratum_matches("cluster_variables.tsv", key, g_root, fx.decode_scaled, directory):
                used.append(f"cluster_variables.tsv:{key}")
            else:
                diffs.append(f"cluster {row.label} g in root coordinates: {g_root}")

    for r in fx.load_tsv("asso_x.tsv", directory):
        if r["type"] != inst.type_name:
            continue
        removed = fx.decode_digits(r["removed"])
        X = [b for b in bg.positive_roots if b != removed]
        got = [bg.restricted_brick_vector(I, X) for I in bg.facets]
        cells += 1
        if got != [fx.decode_digits(s) for s in r["vertex_list"].split()]:
            diffs.append(f"asso_x without {r['removed']}: {got}")
    return diffs, used, cells


def check_tables(inst: Instance, directory=None, timing: bool = True) -> CheckResult:
    def run():
        if not has_ambient(inst.R) or (inst.type_name, inst.c) not in _TABLE_FIXTURES:
            return True, None, {"compared": 0}
        diffs, used, cells = table_diffs(inst, directory)
        return not diffs, diffs[0] if diffs else None, {"compared": cells, "errata": used, "diffs": diffs}
    return timed("tables", inst, run, timing)


# polytope, Newton and tropical checks

def check_typecone(inst: Instance, timing: bool = True) -> CheckResult:
    def run():
        bg, fan = inst.bg, inst.fan
        summands = [bg.summand_polytope(b) for b in bg.positive_roots]
        heights = [support_heights(P, fan) for P in summands]
        rep = type_cone_simplicial_check(fan, heights)
        asso = bg.asso_polytope()
        mismatch = decomposes_on_fan(fan, heights, summands, support_heights(asso, fan), asso)
        decomposes = mismatch is None
        vertex_count = len(asso) == len(bg.facets)
        ok = rep.passed and decomposes and vertex_count
        witness = None
        if not rep.passed:
            bad = [b for b, (inside, _, nv) in zip(bg.positive_roots, rep.boundary)
                   if inside or nv >= rep.facets]
            witness = (f"rank {rep.rank}/{rep.expected_rank}, interior {rep.interior}, "
                       f"boundary failures {bad}")
        elif not decomposes:
            witness = f"sum of summands differs from the brick polytope: {mismatch}"
        elif not vertex_count:
            witness = f"{len(asso)} vertices for {len(bg.facets)} facets"
        return ok, witness, {"rank": rep.rank, "boundary": len(rep.boundary)}
    return timed("typecone", inst, run, timing)


def check_newton(inst: Instance, timing: bool = True) -> CheckResult:
    def run():
        bg = inst.bg
        for beta in bg.positive_roots:
            rec = inst.by_root.get(beta)
            if rec is None:
                return False, f"no cluster variable with d-vector {beta}", {}
            if newton_polytope(rec.f_polynomial) != bg.summand_polytope(beta):
                return False, f"beta {beta}", {}
        return True, None, {"roots": len(bg.positive_roots)}
    return timed("newton", inst, run, timing)


_TROPICAL_FIXTURES = {("B2", (1, 2)): "b2_tropical.tsv"}


def tropical_formula_diffs(inst: Instance, directory=None) -> tuple:
    """``(diffs, compared)`` for the reference max-expressions."""
    name = _TROPICAL_FIXTURES.get((inst.type_name, inst.c))
    if name is None:
        return [], 0
    diffs = []
    rows = fx.load_tsv(name, directory)
    for r in rows:
        beta = fx.decode_digits(r["beta"])
        if beta not in inst.trop_map.exponents:
            diffs.append(f"no coordinate function for {beta}")
        elif (parse_max_expression(r["expression"], inst.R.n)
              != coordinate_function_structure(inst.trop_map, beta)):
            diffs.append(f"{beta}: {format_coordinate_function(inst.trop_map, beta)}")
    if len(rows) != len(inst.trop_map.roots):
        diffs.append(f"{len(rows)} reference functions for {len(inst.trop_map.roots)} roots")
    return diffs, len(rows)


def check_tropical(inst: Instance, seed: int = 0, graph_samples: int = 200,
                   timing: bool = True, directory=None) -> CheckResult:
    def run():
        rep = verify_slice_isomorphism(inst.trop_map, inst.records, inst.fan, seed=seed)
        if not rep.passed:
            return False, rep.witness(), {}
        diffs, _ = tropical_formula_diffs(inst, directory)
        if diffs:
            return False, diffs[0], {"diffs": diffs}
        tm = inst.trop_map
        gens = build_generators(inst.records, tm.roots)
        rng = random.Random(seed)
        n = inst.R.n
        for _ in range(graph_samples):
            w = [Fraction(rng.randint(-50, 50), rng.randint(1, 7)) for _ in range(2 * n)]
            pt = graph_point(tm, w)
            for g in gens:
                if not is_on_positive_hypersurface(g, pt):
                    return False, f"graph point {w} off the hypersurface of {g.beta}", {}
            if not is_homogeneous_at(tm, w, Fraction(rng.randint(1, 9), rng.randint(1, 9))):
                return False, f"not homogeneous at {w}", {}
        return True, None, {"cones": rep.cones, "signatures": rep.distinct}
    return timed("tropical", inst, run, timing)


def property_failures(inst: Instance, oracle_budget: int = ORACLE_BUDGET) -> list:
    """Structural properties; returns a list of failure descriptions."""
    sc, bg, R = inst.sc, inst.bg, inst.R
    out = []
    # flips: weight differences are nonnegative integer multiples of the root
    for I in bg.facets:
        for i in I:
            J, j = sc.flip(I, i)
            if j < i:
                continue
            r = sc.root_function(I, i)
            lead = next(a for a, x in enumerate(r) if x)
            for k in range(1, sc.m + 1):
                d = sub(sc.weight_function(I, k), sc.weight_function(J, k))
                lam = Fraction(d[lead], r[lead])
                if lam < 0 or lam.denominator != 1 or any(x != lam * y for x, y in zip(d, r)):
                    out.append(f"flip {I}->{J} at {k}: {d} vs root {r}")
            bd = sub(bg.brick_vectors[I], bg.brick_vectors[J])
            lam = Fraction(bd[lead], r[lead])
            if lam <= 0 or lam.denominator != 1 or any(x != lam * y for x, y in zip(bd, r)):
                out.append(f"brick flip {I}->{J}: {bd} vs root {r}")
    # [0, beta] is an edge of each summand
    zero = (0,) * R.n
    for beta in bg.positive_roots:
        P = bg.summand_polytope(beta)
        if zero not in P or beta not in P or not is_edge(P, zero, beta):
            out.append(f"[0,{beta}] is not an edge of its summand")
    # F-polynomials
    for beta, rec in inst.by_root.items():
        if not check_extremal_exponents(rec.f_polynomial, beta):
            out.append(f"F-polynomial of {beta} fails the extremal exponent test")
        if separation_formula(rec, initial_matrix(R, inst.c)) != rec.expr:
            out.append(f"separation formula disagrees for {beta}")
    # ray weights well defined per position, and g-vectors are the rays
    try:
        weights = g_fan_weights(sc)
        g_vector_fan(sc)
    except BrickforgeError as exc:
        out.append(str(exc))
    else:
        for beta, rec in inst.by_root.items():
            if tuple(weights[bg.position_of_root(beta)]) != rec.g_vector:
                out.append(f"g-vector of {beta} differs from its ray")
    # brute-force oracles where affordable
    if facets_bruteforce_cost(sc.m, sc.facet_size) <= oracle_budget:
        if sc.facets_brute_force() != bg.facets:
            out.append("facet enumeration differs from brute force")
    pts = list(bg.brick_vectors.values())
    if hull_oracle_cost(len(pts), R.n) <= oracle_budget:
        if hull_vertices_bruteforce(pts) != frozenset(bg.asso_polytope().vertices):
            out.append("brick polytope vertices differ from the oracle")
    for beta in bg.positive_roots:
        col = {bg.shifted_weight(I, beta) for I in bg.facets}
        if hull_oracle_cost(len(col), R.n) <= oracle_budget:
            if hull_vertices_bruteforce(col) != frozenset(bg.summand_polytope(beta).vertices):
                out.append(f"summand {beta} vertices differ from the oracle")
    return out


def check_properties(inst: Instance, timing: bool = True) -> CheckResult:
    def run():
        bad = property_failures(inst)
        return not bad, bad[0] if bad else None, {"failures": bad}
    return timed("properties", inst, run, timing)


# the two non-cluster words

COUNTEREXAMPLE_WORDS = ((1, 2, 1, 2, 1, 2, 1), (2, 1, 2, 2, 1, 2))


def _poly(text: str):
    return hull_vertices(fx.decode_digits(t) for t in text.split())


def counterexample_diffs(directory=None) -> tuple:
    R = RootSystem("B2")
    rows = fx.load_tsv("counterexamples.tsv", directory)
    diffs, used = [], []
    for word in COUNTEREXAMPLE_WORDS:
        wname = format_word(word)
        rep = word_report(R, word)
        items = [(r["item"], r["value"]) for r in rows if r["word"] == wname]
        cols = {k: hull_vertices(v) for k, v in rep.columns.items()}
        missing = None
        for item, value in items:
            if item == "facets":
                printed = [fx.decode_facet(f) for f in value.split()]
                fixed = []
                for f in printed:
                    key = f"{wname}/facets/{value.split()[printed.index(f)]}"
                    e = fx.erratum_for("counterexamples.tsv", key, directory)
                    if e is not None and f not in rep.facets:
                        fixed.append(fx.decode_facet(e.corrected))
                        used.append(key)
                    else:
                        fixed.append(f)
                if sorted(fixed) != rep.facets:
                    diffs.append(f"{wname} facets: {rep.facets}")
            elif item == "greedy_roots":
                printed = [fx.decode_digits(t) for t in value.split()]
                if printed != rep.greedy_roots:
                    key = f"{wname}/greedy_roots"
                    e = fx.erratum_for("counterexamples.tsv", key, directory)
                    if e is not None and [fx.decode_digits(t) for t in e.corrected.split()] == rep.greedy_roots:
                        used.append(key)
                    else:
                        diffs.append(f"{wname} greedy roots: {rep.greedy_roots}")
            elif item == "unsupported":
                if [int(t) for t in value.split()] != rep.unsupported:
                    diffs.append(f"{wname} unsupported positions: {rep.unsupported}")
            elif item.startswith("P") and item[1:].isdigit():
                if cols[int(item[1:])] != _poly(value):
                    diffs.append(f"{wname} {item}: {sorted(cols[int(item[1:])].vertices)}")
            elif item == "missing_generator":
                missing = _poly(value)
            elif item == "P4+P6":
                parts = [_poly(p) for p in value.split("|")]
                if minkowski_sum(cols[4], cols[6]) != minkowski_sum(*parts):
                    diffs.append(f"{wname} P4+P6 decomposition fails")
            elif item == "brick_vertices":
                if len(rep.brick_vertices) != int(value):
                    diffs.append(f"{wname} brick polytope has {len(rep.brick_vertices)} vertices")
        if missing is not None:
            diffs.extend(_missing_generator_diffs(wname, cols, missing))
        if wname == "1212121":
            diffs.extend(_permutahedron_diffs(R, rep))
            if rep.root_independent or rep.unsupported:
                diffs.append("1212121 should have full support and not be root-independent")
        else:
            if not rep.root_independent or not rep.unsupported:
                diffs.append("212212 should be root-independent without full support")
    return diffs, used


def _missing_generator_diffs(wname, cols, missing) -> list:
    out = []
    if any(P == missing for P in cols.values()):
        out.append(f"{wname}: the missing generator occurs as a column")
    if wname == "1212121":
        if minkowski_sum(cols[3], missing) != cols[5]:
            out.append("1212121: P5 != P3 + missing generator")
    else:
        if minkowski_sum(cols[3], cols[6]) != cols[5]:
            out.append("212212: P5 != P3 + P6")
        if minkowski_sum(cols[3], missing) != cols[4]:
            out.append("212212: P4 != P3 + missing generator")
    return out


def _permutahedron_diffs(R: RootSystem, rep) -> list:
    """Eight vertices with every edge parallel to a root: the normal fan is
    then the Coxeter fan."""
    P = hull_vertices(rep.brick_vertices)
    if len(P) != 2 * R.N:
        return [f"brick polytope has {len(P)} vertices"]
    roots = R.positive_roots
    verts = list(P.vertices)
    edges = 0
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            if is_edge(P, verts[a], verts[b]):
                edges += 1
                d = sub(verts[b], verts[a])
                if not any(rank([d, r]) == 1 for r in roots):
                    return [f"edge {verts[a]}-{verts[b]} is not parallel to a root"]
    return [] if edges == len(verts) else [f"{edges} edges"]


def check_counterexamples(directory=None, timing: bool = True) -> CheckResult:
    def run():
        diffs, used = counterexample_diffs(directory)
        return not diffs, diffs[0] if diffs else None, {"errata": used, "diffs": diffs}
    res = timed("counterexamples", None, run, timing)
    res.type = "B2"
    res.coxeter_word = "-"
    return res


def trop_formulas(inst: Instance) -> dict:
    return {b: format_coordinate_function(inst.trop_map, b) for b in inst.trop_map.roots}
