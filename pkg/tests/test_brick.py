import pytest

from brickforge.brick import BrickGeometry
from brickforge.coxeter import RootSystem
from brickforge.oracles import hull_vertices_bruteforce
from brickforge.subword import SubwordComplex

from conftest import instance


def test_positions_of_roots():
    a3, b2 = instance("A3").bg, instance("B2").bg
    assert a3.root_of_position(6) == (1, 1, 1)
    assert b2.root_of_position(5) == (1, 2)
    assert a3.root_of_position(4) == (1, 0, 0)
    for k in range(4, 10):
        assert a3.position_of_root(a3.root_of_position(k)) == k


def test_shifted_weights():
    a3, b2 = instance("A3").bg, instance("B2").bg
    assert a3.shifted_weight((1, 2, 9), (1, 1, 1)) == (1, 1, 0)
    assert b2.shifted_weight((3, 4), (1, 2)) == (1, 2)
    for beta in a3.positive_roots:
        assert a3.shifted_weight(a3.antigreedy, beta) == (0, 0, 0)


def test_brick_vectors():
    a3, b2 = instance("A3").bg, instance("B2").bg
    assert a3.brick_vector((1, 2, 3)) == (3, 4, 3)
    assert b2.brick_vector((2, 3)) == (2, 4)
    X = [b for b in a3.positive_roots if b != (1, 1, 1)]
    assert a3.restricted_brick_vector((3, 4, 5), X) == (0, 2, 2)
    assert a3.restricted_brick_vector((4, 5, 6), X) == (0, 2, 2)


def test_brick_polytopes():
    b2 = instance("B2").bg
    assert set(b2.asso_polytope().vertices) == {(0, 0), (0, 1), (1, 3), (2, 4), (3, 4), (3, 0)}
    a3 = instance("A3").bg
    assert len(a3.asso_polytope()) == 14
    a1 = BrickGeometry(SubwordComplex.cluster(RootSystem("A1"), (1,)))
    assert set(a1.asso_polytope().vertices) == {(0,), (1,)}


def test_summands():
    a3, b2 = instance("A3").bg, instance("B2").bg
    assert set(a3.summand_polytope((1, 1, 1)).vertices) == {(1, 1, 1), (1, 1, 0), (1, 0, 0), (0, 0, 0)}
    assert set(b2.summand_polytope((1, 2)).vertices) == {(1, 2), (1, 0), (0, 0)}
    assert set(a3.summand_polytope((1, 0, 0)).vertices) == {(0, 0, 0), (1, 0, 0)}


def test_restricted_polytopes():
    b2 = instance("B2").bg
    X = [b for b in b2.positive_roots if b != (1, 2)]
    assert set(b2.asso_X_polytope(X).vertices) == {(2, 2), (2, 0), (1, 2), (0, 1), (0, 0)}
    assert b2.asso_X_polytope([]).vertices == ((0, 0),)
    assert b2.asso_X_polytope(b2.positive_roots) == b2.asso_polytope()


def test_column_polytopes():
    B2 = RootSystem("B2")
    bg = BrickGeometry(SubwordComplex(B2, (2, 1, 2, 2, 1, 2)))
    assert set(bg.column_polytope(4).vertices) == {(0, 0), (0, 1), (1, 1), (1, 2)}
    assert bg.column_polytope(1).vertices == ((0, 0),)
    bg = BrickGeometry(SubwordComplex(B2, (1, 2, 1, 2, 1, 2, 1)))
    assert set(bg.column_polytope(5).vertices) == {(0, 0), (1, 0), (1, 2), (2, 2)}


@pytest.mark.parametrize("name", ["A3", "B2", "G2", "C3"])
def test_brick_hull_against_oracle(name):
    bg = instance(name).bg
    pts = list(bg.brick_vectors.values())
    assert hull_vertices_bruteforce(pts) == frozenset(bg.asso_polytope().vertices)
