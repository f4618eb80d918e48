"""Structural invariants as property tests over small instances."""

from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from brickforge.coxeter import RootSystem
from brickforge.linalg import sub
from brickforge.lp import INFEASIBLE, linprog
from brickforge.oracles import fourier_motzkin_feasible, in_hull_fourier_motzkin
from brickforge.polyhedra import (hull_vertices, in_convex_hull, minkowski_sum,
                                  polytope_from_heights, support_heights)
from brickforge.tropical import trop_eval

from conftest import instance

SMALL = ["A1", "A2", "B2", "G2", "A3", "B3", "C3"]
TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"]
PAIRS = [(t, c) for t in SMALL for c in RootSystem(t).coxeter_elements()]

pairs = st.sampled_from(PAIRS)
rationals = st.fractions(min_value=-10, max_value=10, max_denominator=5)


def _weight_reflect(R, i, x):
    # the coefficient of omega_i is the pairing with the coroot
    col = [R.cartan[j][i - 1] for j in range(R.n)]
    return tuple(a - x[i - 1] * c for a, c in zip(x, col))


# coxeter-core

@given(st.sampled_from(TYPES), st.data())
def test_reflection_involution_and_basis_change(name, data):
    R = RootSystem(name)
    v = tuple(data.draw(st.lists(rationals, min_size=R.n, max_size=R.n)))
    i = data.draw(st.integers(1, R.n))
    assert R.reflect(i, R.reflect(i, v)) == v
    word = data.draw(st.lists(st.integers(1, R.n), max_size=6))
    x = R.weight_coords(v)
    for s in reversed(word):
        x = _weight_reflect(R, s, x)
    assert R.weight_coords(R.act(word, v)) == x


@pytest.mark.parametrize("name", TYPES + ["B4", "C4", "E6"])
def test_positive_root_counts(name):
    R = RootSystem(name)
    n = R.n
    fam = R.cartan_type.family
    expected = {"A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1), "G": 6,
                "F": 24, "E": {6: 36, 7: 63, 8: 120}.get(n)}[fam]
    assert R.N == expected


@given(pairs)
def test_sorting_word(pair):
    name, c = pair
    R = RootSystem(name)
    w = R.sorting_word(c)
    assert R.is_reduced(w) and R.element(w) == R.longest_element
    it = iter(c * R.N)
    assert all(s in it for s in w)  # subword of c^N


@given(st.sampled_from(TYPES), st.randoms(use_true_random=False))
def test_greedy_ascent_reaches_w0(name, rnd):
    R = RootSystem(name)
    word = []
    while True:
        ups = [s for s in range(1, R.n + 1) if R.is_reduced(word + [s])]
        if not ups:
            break
        word.append(rnd.choice(ups))
    assert R.element(word) == R.longest_element and len(word) == R.N


# subword complexes

@given(pairs)
def test_flip_differences_and_initial_weights(pair):
    inst = instance(*pair)
    sc, bg = inst.sc, inst.bg
    anti = sc.antigreedy_facet()
    for I in bg.facets:
        for k in range(1, sc.n + 1):
            assert sc.weight_function(I, k) == sc.weight_function(anti, k)
        for i in I:
            J, j = sc.flip(I, i)
            if j < i:
                continue
            r = sc.root_function(I, i)
            lead = next(a for a, x in enumerate(r) if x)
            for k in range(1, sc.m + 1):
                d = sub(sc.weight_function(I, k), sc.weight_function(J, k))
                lam = Fraction(d[lead], r[lead])
                assert lam >= 0 and lam.denominator == 1
                assert all(x == lam * y for x, y in zip(d, r))
            d = sub(bg.brick_vectors[I], bg.brick_vectors[J])
            lam = Fraction(d[lead], r[lead])
            assert lam > 0 and lam.denominator == 1 and all(x == lam * y for x, y in zip(d, r))


@given(pairs)
def test_canonical_sequence_and_rays(pair):
    inst = instance(*pair)
    sc = inst.sc
    seq = sc.canonical_long_flip_sequence()
    assert len(seq.pivots) == sc.N
    assert sorted(j for _, j in seq.pivots) == list(range(sc.n + 1, sc.n + sc.N + 1))
    for p in range(1, sc.m + 1):
        assert len({sc.weight_function(I, p) for I in sc.facets() if p in I}) == 1


# brick polytopes

@given(pairs, st.data())
def test_minkowski_decomposition_of_restrictions(pair, data):
    inst = instance(*pair)
    assume(inst.R.N <= 6)
    bg = inst.bg
    X = data.draw(st.lists(st.sampled_from(bg.positive_roots), unique=True))
    parts = [bg.summand_polytope(b) for b in X]
    expected = minkowski_sum(*parts) if parts else hull_vertices([(0,) * inst.R.n])
    assert bg.asso_X_polytope(X) == expected


@given(pairs)
def test_vertices_injective_and_boundary(pair):
    inst = instance(*pair)
    bg = inst.bg
    vs = list(bg.brick_vectors.values())
    assert len(set(vs)) == len(vs) == len(bg.asso_polytope())
    for gamma in bg.positive_roots:
        X = [b for b in bg.positive_roots if b != gamma]
        assert len(bg.asso_X_polytope(X)) < len(bg.facets)


# polyhedra

@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=8),
       st.randoms(use_true_random=False))
def test_hull_order_independent(pts, rnd):
    shuffled = list(pts)
    rnd.shuffle(shuffled)
    assert hull_vertices(pts) == hull_vertices(shuffled)


@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=6),
       st.tuples(st.integers(-4, 4), st.integers(-4, 4)))
def test_lp_membership_matches_elimination(pts, p):
    assert in_convex_hull(p, pts) == in_hull_fourier_motzkin(p, pts)


@given(st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2), min_size=1, max_size=6),
       st.lists(st.integers(-4, 4), min_size=6, max_size=6))
def test_lp_feasibility_matches_elimination(A, b):
    b = b[:len(A)]
    res = linprog([0, 0], A, b, free=[True, True])
    assert (res.status != INFEASIBLE) == fourier_motzkin_feasible(A, b)


@given(pairs, st.lists(st.integers(1, 4), min_size=12, max_size=12))
def test_heights_round_trip(pair, coeffs):
    inst = instance(*pair)
    assume(inst.R.N <= 9)
    fan, bg = inst.fan, inst.bg
    # positive combinations of summands stay in the type cone
    hs = [support_heights(bg.summand_polytope(b), fan) for b in bg.positive_roots]
    h = tuple(sum(c * x[i] for c, x in zip(coeffs, hs)) for i in range(len(fan.rays)))
    real = polytope_from_heights(fan, h)
    assert real.in_type_cone
    assert support_heights(real.polytope, fan) == h
    assert polytope_from_heights(fan, support_heights(bg.asso_polytope(), fan)).polytope == \
        bg.asso_polytope()


@given(pairs)
def test_fan_completeness(pair):
    assert instance(*pair).fan.completeness_check(samples=200)


# cluster variables

@given(pairs)
def test_cluster_variables(pair):
    inst = instance(*pair)
    others = [r for r in inst.records if not r.is_initial]
    assert len(others) == inst.R.N
    assert sorted(r.d_vector for r in others) == sorted(inst.R.positive_roots)
    n = inst.R.n
    for r in others:
        num, den = r.expr.numerator_denominator()
        assert num.is_laurent_positive()
        assert all(c > 0 and Fraction(c).denominator == 1 for c in num.terms.values())
        assert all(x == 0 for x in den[n:])
        weights = {}
        for I in inst.sc.facets():
            p = inst.bg.position_of_root(r.d_vector)
            if p in I:
                weights[p] = inst.R.weight_coords(inst.sc.weight_function(I, p))
        assert tuple(next(iter(weights.values()))) == r.g_vector


# tropical map

@given(pairs, st.data())
def test_homogeneity_with_signatures(pair, data):
    inst = instance(*pair)
    n = inst.R.n
    w = data.draw(st.lists(rationals, min_size=2 * n, max_size=2 * n))
    lam = data.draw(st.fractions(min_value=Fraction(1, 10), max_value=10))
    v1, s1 = trop_eval(inst.trop_map, w)
    v2, s2 = trop_eval(inst.trop_map, [lam * x for x in w])
    assert s1 == s2
    assert all(v2[b] == lam * v1[b] for b in v1)


@given(pairs, st.data())
def test_argmax_matches_newton_faces(pair, data):
    inst = instance(*pair)
    n = inst.R.n
    y = data.draw(st.lists(rationals, min_size=n, max_size=n))
    _, sig = trop_eval(inst.trop_map, [0] * n + list(y))
    for beta, arg in sig.items():
        F = inst.by_root[beta].f_polynomial
        best = max(sum(a * b for a, b in zip(e, y)) for e in F.terms)
        face = sorted(e for e in F.terms if sum(a * b for a, b in zip(e, y)) == best)
        # exponents of p_beta restricted to y, on the x = 0 slice
        assert sorted({e[n:] for e in arg}) == sorted(set(face))
