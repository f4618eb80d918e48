import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from brickforge.errors import IndexMismatch
from brickforge.polyhedra import Fan
from brickforge.tropical import (argmax_set, build_generators, coordinate_function_structure,
                                 format_coordinate_function, graph_point, is_homogeneous_at,
                                 is_on_positive_hypersurface, parse_max_expression,
                                 projection_check, trop_eval, verify_slice_isomorphism)

from conftest import instance

# the four B2 coordinate functions written out by hand, over (x1, x2, y1, y2)
B2_FORMS = {
    (1, 0): ([(0, 2, 0, 0), (0, 0, 1, 0)], (1, 0, 0, 0)),
    (1, 1): ([(1, 0, 1, 1), (0, 2, 0, 0), (0, 0, 1, 0)], (1, 1, 0, 0)),
    (1, 2): ([(2, 0, 1, 2), (1, 0, 1, 1), (0, 2, 0, 0), (0, 0, 1, 0)], (1, 2, 0, 0)),
    (0, 1): ([(1, 0, 0, 1), (0, 0, 0, 0)], (0, 1, 0, 0)),
}


def _by_hand(beta, w):
    forms, offset = B2_FORMS[beta]
    return max(sum(a * b for a, b in zip(f, w)) for f in forms) - sum(
        a * b for a, b in zip(offset, w))


def test_b2_formulas():
    tm = instance("B2").trop_map
    assert len(tm) == 4
    assert format_coordinate_function(tm, (1, 0)) == "max(2x2, y1) - x1"
    assert format_coordinate_function(tm, (0, 1)) == "max(x1 + y2, 0) - x2"
    for beta, (forms, offset) in B2_FORMS.items():
        assert coordinate_function_structure(tm, beta) == (frozenset(forms), offset)


def test_a1_formula():
    tm = instance("A1").trop_map
    assert format_coordinate_function(tm, (1,)) == "max(y1, 0) - x1"


@given(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=6), min_size=4, max_size=4))
def test_b2_values_match_hand_formulas(w):
    values, _ = trop_eval(instance("B2").trop_map, w)
    for beta in B2_FORMS:
        assert values[beta] == _by_hand(beta, w)


def test_argmax_examples():
    E = instance("B2").trop_map.exponents
    assert argmax_set(E[(1, 0)], (0, 0, 0, 0)) == (0, tuple(sorted(E[(1, 0)])))
    assert argmax_set(E[(1, 2)], (0, 0, 1, 1)) == (3, ((2, 0, 1, 2),))
    assert argmax_set([(1, 2)], (5, 7))[1] == ((1, 2),)
    values, sig = trop_eval(instance("B2").trop_map, (0, 0, 1, 0))
    assert values[(1, 0)] == 1 and sig[(1, 0)] == ((0, 0, 1, 0),)
    values, sig = trop_eval(instance("B2").trop_map, (0, 0, 0, 0))
    assert all(v == 0 for v in values.values()) and all(len(s) >= 2 for s in sig.values())


def test_index_mismatch():
    with pytest.raises(IndexMismatch):
        trop_eval(instance("B2").trop_map, (0, 0, 0))


def test_generators():
    inst = instance("B2")
    gens = {g.beta: g for g in build_generators(inst.records, inst.trop_map.roots)}
    g = gens[(0, 1)]
    n = len(g.positive_part)
    assert all(is_on_positive_hypersurface(x, (0,) * n) for x in gens.values())
    # order: x1 x2, then x_beta in root order, then y1 y2
    w = [0] * n
    idx = 2 + list(inst.trop_map.roots).index((0, 1))
    w[1], w[idx], w[0], w[-1] = 2, 3, 1, 2
    assert not is_on_positive_hypersurface(g, w)


@pytest.mark.parametrize("name", ["B2", "A3", "G2"])
def test_graph_points_on_hypersurfaces(name):
    inst = instance(name)
    gens = build_generators(inst.records, inst.trop_map.roots)
    rng = random.Random(7)
    for _ in range(50):
        w = [Fraction(rng.randint(-30, 30), rng.randint(1, 5)) for _ in range(2 * inst.R.n)]
        pt = graph_point(inst.trop_map, w)
        assert all(is_on_positive_hypersurface(g, pt) for g in gens)
        assert is_homogeneous_at(inst.trop_map, w, Fraction(3, 2))


@pytest.mark.parametrize("name,cones", [("A1", 2), ("B2", 6), ("A3", 14), ("G2", 8), ("A2", 5)])
def test_slice_isomorphism(name, cones):
    inst = instance(name)
    rep = verify_slice_isomorphism(inst.trop_map, inst.records, inst.fan)
    assert rep.passed and rep.cones == rep.distinct == cones
    assert all(projection_check(inst.trop_map, inst.records).values())


def test_slice_check_fails_with_the_plain_pairing():
    # rays read in fundamental-weight coordinates instead of coweights
    from brickforge.polyhedra import g_fan_weights
    inst = instance("B2")
    weights = g_fan_weights(inst.sc)
    fan = Fan(tuple(tuple(weights[p]) for p in inst.fan.labels), inst.fan.maximal_cones)
    rep = verify_slice_isomorphism(inst.trop_map, inst.records, fan)
    assert not rep.passed


def test_parse_max_expression():
    tex = r"\max(2 x_1 + y_1 + 2 y_2 \, , \, x_1 + y_1 + y_2 \, , \, 2 x_2 \, , \, y_1) - x_1 - 2 x_2"
    forms, offset = parse_max_expression(tex, 2)
    assert forms == frozenset(B2_FORMS[(1, 2)][0]) and offset == (1, 2, 0, 0)
    assert parse_max_expression("max(x1 + y2, 0) - x2", 2) == (
        frozenset({(1, 0, 0, 1), (0, 0, 0, 0)}), (0, 1, 0, 0))
    with pytest.raises(ValueError):
        parse_max_expression("x1 + y1", 2)
