import pytest
from hypothesis import given, strategies as st

from brickforge.oracles import (facets_bruteforce_cost, hull_oracle_cost,
                                hull_vertices_bruteforce)


def test_simple_hulls():
    assert hull_vertices_bruteforce([(0, 0), (2, 0), (0, 2), (1, 1)]) == {(0, 0), (2, 0), (0, 2)}
    assert hull_vertices_bruteforce([(0, 0), (1, 1), (2, 2)]) == {(0, 0), (2, 2)}
    assert hull_vertices_bruteforce([(3, 3)]) == {(3, 3)}
    # a square in a plane of R^3
    sq = [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1), (0.5, 0.5, 1)]
    assert hull_vertices_bruteforce(sq) == set(sq[:4])


@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(1, 5))
def test_triangle_interior_point(a, b, k):
    tri = [(a, b), (a + 3 * k, b), (a, b + 3 * k)]
    assert hull_vertices_bruteforce(tri + [(a + k, b + k)]) == set(tri)


def test_costs():
    assert hull_oracle_cost(6, 2) == 6 * 10
    assert facets_bruteforce_cost(9, 3) == 84


def test_overflow_guard():
    with pytest.raises(OverflowError):
        hull_vertices_bruteforce([(0, 0), (10 ** 9, 0), (0, 10 ** 9), (1, 1)])
