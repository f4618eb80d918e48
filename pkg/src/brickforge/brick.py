"""Brick vectors, brick polytopes and their natural Minkowski summands."""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

from .errors import RootNotPositive
from .linalg import add, sub, zero
from .polyhedra import VPolytope, hull_vertices
from .subword import SubwordComplex


class BrickGeometry:
    """Brick data for a subword complex, normalized so the antigreedy facet
    sits at the origin.

    For a cluster word ``c w0(c)`` the positions ``n+1 .. n+N`` are labelled
    by positive roots through the root function of the greedy facet.
    """

    def __init__(self, sc: SubwordComplex):
        self.sc = sc
        self.R = sc.R

    @cached_property
    def facets(self) -> list:
        return self.sc.facets()

    @cached_property
    def greedy(self):
        return self.sc.greedy_facet()

    @cached_property
    def antigreedy(self):
        return self.sc.antigreedy_facet()

    @cached_property
    def _position_of_root(self) -> dict:
        n, N = self.sc.n, self.sc.N
        roots = self.sc.roots(self.greedy)
        table = {roots[k - 1]: k for k in range(n + 1, n + N + 1)}
        return table

    def position_of_root(self, beta: Sequence) -> int:
        beta = tuple(beta)
        try:
            return self._position_of_root[beta]
        except KeyError:
            raise RootNotPositive(f"{beta} is not a positive root") from None

    def root_of_position(self, k: int) -> tuple:
        n, N = self.sc.n, self.sc.N
        if not n < k <= n + N:
            raise RootNotPositive(f"position {k} is outside {n + 1}..{n + N}")
        return self.sc.root_function(self.greedy, k)

    @property
    def positive_roots(self) -> list:
        """Positive roots in position order n+1..n+N."""
        return [self.root_of_position(k) for k in range(self.sc.n + 1, self.sc.n + self.sc.N + 1)]

    def shifted_weight_at(self, I, k: int) -> tuple:
        """``w(I, k) - w(antigreedy, k)`` for any position ``k``."""
        return sub(self.sc.weight_function(I, k), self.sc.weight_function(self.antigreedy, k))

    def shifted_weight(self, I, beta: Sequence) -> tuple:
        return self.shifted_weight_at(I, self.position_of_root(beta))

    def restricted_brick_vector(self, I, X: Iterable) -> tuple:
        out = zero(self.sc.n)
        for beta in X:
            out = add(out, self.shifted_weight(I, beta))
        return out

    def brick_vector(self, I) -> tuple:
        """Sum of the shifted weights over the positions n+1..n+N.

        For general words (not of the form ``c w0(c)``) the sum runs over
        all positions instead.
        """
        out = zero(self.sc.n)
        for k in self._brick_positions:
            out = add(out, self.shifted_weight_at(I, k))
        return out

    @cached_property
    def _brick_positions(self) -> range:
        if self.sc.coxeter_word is not None:
            return range(self.sc.n + 1, self.sc.n + self.sc.N + 1)
        return range(1, self.sc.m + 1)

    @cached_property
    def brick_vectors(self) -> dict:
        return {I: self.brick_vector(I) for I in self.facets}

    def shifted_weight_table(self) -> list:
        """Rows ``(I, [shifted weights at n+1..n+N], brick vector)``."""
        positions = range(self.sc.n + 1, self.sc.n + self.sc.N + 1)
        return [(I, [self.shifted_weight_at(I, k) for k in positions], self.brick_vectors[I])
                for I in self.facets]

    # polytopes

    def asso_polytope(self) -> VPolytope:
        return hull_vertices(self.brick_vectors.values())

    def summand_polytope(self, beta: Sequence) -> VPolytope:
        k = self.position_of_root(beta)
        return self.column_polytope(k)

    def asso_X_polytope(self, X: Iterable) -> VPolytope:
        X = [tuple(b) for b in X]
        if not X:
            return VPolytope((zero(self.sc.n),))
        return hull_vertices(self.restricted_brick_vector(I, X) for I in self.facets)

    def column_polytope(self, k: int) -> VPolytope:
        """Convex hull of the ``k``-th column of the shifted weight table."""
        return hull_vertices({self.shifted_weight_at(I, k) for I in self.facets})
