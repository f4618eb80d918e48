import itertools

import pytest

from brickforge.coxeter import RootSystem
from brickforge.errors import DemazureTooShort
from brickforge.subword import SubwordComplex, demazure_product

A3_FACETS = [(1, 2, 3), (1, 2, 9), (1, 3, 7), (1, 7, 8), (1, 8, 9), (2, 3, 4), (2, 4, 9),
             (3, 4, 5), (3, 5, 7), (4, 5, 6), (4, 6, 9), (5, 6, 7), (6, 7, 8), (6, 8, 9)]
B2_FACETS = [(1, 2), (1, 6), (2, 3), (3, 4), (4, 5), (5, 6)]


@pytest.fixture(scope="module")
def a3():
    return SubwordComplex.cluster(RootSystem("A3"), (1, 2, 3))


@pytest.fixture(scope="module")
def b2():
    return SubwordComplex.cluster(RootSystem("B2"), (1, 2))


def test_cluster_words(a3, b2):
    assert a3.Q == (1, 2, 3, 1, 2, 3, 1, 2, 1) and a3.m == 9
    assert b2.Q == (1, 2, 1, 2, 1, 2) and b2.m == 6


def test_reduced_word_has_single_empty_facet():
    sc = SubwordComplex(RootSystem("B2"), (1, 2, 1, 2))
    assert sc.facets() == [()]
    assert sc.greedy_facet() == sc.antigreedy_facet() == ()


def test_short_word_rejected():
    with pytest.raises(DemazureTooShort):
        SubwordComplex(RootSystem("B2"), (1, 2, 1))


def test_demazure_product():
    B2 = RootSystem("B2")
    assert demazure_product(B2, (1, 2, 1, 2, 1, 2)) == B2.longest_element
    assert demazure_product(B2, ()) == ((1, 0), (0, 1))
    A1 = RootSystem("A1")
    assert demazure_product(A1, (1, 1)) == A1.element((1,))


def test_is_facet(a3, b2):
    assert a3.is_facet((1, 2, 3))
    assert not a3.is_facet((1, 2, 4))
    assert b2.is_facet((5, 6))


def test_facet_lists(a3, b2):
    assert a3.facets() == A3_FACETS
    assert b2.facets() == B2_FACETS
    sc = SubwordComplex(RootSystem("B2"), (2, 1, 2, 2, 1, 2))
    assert sc.facets() == [(1, 3), (1, 4), (3, 6), (4, 6)]


def test_facets_match_definition(a3):
    # oracle: complements that are reduced words of w0
    R = a3.R
    brute = []
    for I in itertools.combinations(range(1, a3.m + 1), a3.m - R.N):
        word = [a3.Q[k - 1] for k in range(1, a3.m + 1) if k not in I]
        if R.is_reduced(word) and R.element(word) == R.longest_element:
            brute.append(I)
    assert brute == A3_FACETS == a3.facets_brute_force()


def test_root_function(a3, b2):
    assert a3.root_function((1, 2, 9), 6) == (1, 1, 0)
    # ambient (-2,-2) with a1 = (2,-2), a2 = (0,2)
    r = b2.root_function((4, 5), 5)
    assert (2 * r[0], -2 * r[0] + 2 * r[1]) == (-2, -2)
    assert r == (-1, -2)
    for I in a3.facets():
        assert a3.root_function(I, 1) == (1, 0, 0)


def test_weight_function(a3, b2):
    R = a3.R
    for I in a3.facets():
        assert a3.weight_function(I, 1) == R.fundamental_weight(1)
    # ambient 02 for B2 with a1 = (2,-2), a2 = (0,2) is root vector (0, 1)
    assert b2.weight_function((1, 2), 5) == (0, 1)


def test_flips(a3, b2):
    assert a3.flip((1, 2, 3), 1) == ((2, 3, 4), 4)
    assert b2.flip((1, 2), 1) == ((2, 3), 3)
    for I in a3.facets():
        for i in I:
            J, j = a3.flip(I, i)
            assert a3.flip(J, j) == (I, i)


def test_greedy_and_antigreedy(a3, b2):
    assert (a3.greedy_facet(), a3.antigreedy_facet()) == ((1, 2, 3), (6, 8, 9))
    assert (b2.greedy_facet(), b2.antigreedy_facet()) == ((1, 2), (5, 6))


def test_canonical_long_flip_sequence(a3, b2):
    assert a3.canonical_long_flip_sequence().facets == (
        (1, 2, 3), (2, 3, 4), (3, 4, 5), (4, 5, 6), (5, 6, 7), (6, 7, 8), (6, 8, 9))
    assert b2.canonical_long_flip_sequence().facets == ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6))
    a1 = SubwordComplex(RootSystem("A1"), (1, 1))
    assert a1.canonical_long_flip_sequence().facets == ((1,), (2,))


def test_independence_and_support(b2):
    B2 = RootSystem("B2")
    sc = SubwordComplex(B2, (1, 2, 1, 2, 1, 2, 1))
    assert not sc.is_root_independent() and sc.has_full_support()
    sc = SubwordComplex(B2, (2, 1, 2, 2, 1, 2))
    assert sc.unsupported_positions() == [2, 5] and not sc.has_full_support()
    assert b2.is_root_independent() and b2.has_full_support()
    greedy_roots = [b2.root_function(b2.greedy_facet(), i) for i in b2.greedy_facet()]
    assert sorted(greedy_roots) == [(0, 1), (1, 0)]
