"""Spherical subword complexes.

Positions in a word are 1-based.  A facet is a sorted tuple of positions
whose complement is a reduced word for the longest element.
"""

from __future__ import annotations

import itertools
import threading
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .coxeter import RootSystem, identity, is_positive
from .errors import DemazureTooShort, NotClusterWord
from .linalg import mat_vec, rank

Facet = tuple


def demazure_product(R: RootSystem, word: Iterable[int]):
    """Product of ``word`` in the 0-Hecke monoid: letters that would lower
    the length are absorbed."""
    m = identity(R.n)
    for s in word:
        if is_positive(tuple(r[s - 1] for r in m)):
            m = R.right_multiply(m, s)
    return m


@dataclass(frozen=True)
class FlipSequence:
    facets: tuple
    pivots: tuple  # (i, j) with I_l - {i} == I_{l+1} - {j}


class SubwordComplex:
    """The subword complex of a word ``Q`` with respect to the longest element."""

    def __init__(self, R: RootSystem, Q: Sequence[int]):
        Q = tuple(int(q) for q in Q)
        if any(not 1 <= q <= R.n for q in Q):
            raise ValueError(f"letters of {Q} must lie in 1..{R.n}")
        self.R = R
        self.Q = Q
        self.m = len(Q)
        self.n = R.n
        self.N = R.N
        self.w0 = R.longest_element
        if demazure_product(R, Q) != self.w0:
            raise DemazureTooShort(f"{Q} contains no reduced word for w0")
        self._tables: dict = {}
        self._lock = threading.Lock()

    @classmethod
    def cluster(cls, R: RootSystem, c: Sequence[int]) -> "SubwordComplex":
        """The complex of the word ``c w0(c)``."""
        c = tuple(c)
        sc = cls(R, c + R.sorting_word(c))
        sc.coxeter_word = c
        return sc

    coxeter_word = None

    def __repr__(self):
        return f"SubwordComplex({self.R!r}, {''.join(map(str, self.Q))})"

    @property
    def facet_size(self) -> int:
        return self.m - self.N

    # membership

    def complement(self, I: Iterable[int]) -> tuple:
        I = set(I)
        return tuple(self.Q[k - 1] for k in range(1, self.m + 1) if k not in I)

    def is_facet(self, I: Iterable[int]) -> bool:
        I = tuple(I)
        if len(set(I)) != self.facet_size or any(not 1 <= k <= self.m for k in I):
            return False
        return self.R.is_reduced(self.complement(I))

    def _absorbs_to_w0(self, removed: set) -> bool:
        rest = (self.Q[k - 1] for k in range(1, self.m + 1) if k not in removed)
        return demazure_product(self.R, rest) == self.w0

    def greedy_facet(self) -> Facet:
        """Lexicographically first facet, by a left-to-right greedy scan."""
        chosen: set = set()
        for k in range(1, self.m + 1):
            if self._absorbs_to_w0(chosen | {k}):
                chosen.add(k)
        return tuple(sorted(chosen))

    def antigreedy_facet(self) -> Facet:
        """Lexicographically last facet, by a right-to-left greedy scan."""
        chosen: set = set()
        for k in range(self.m, 0, -1):
            if self._absorbs_to_w0(chosen | {k}):
                chosen.add(k)
        return tuple(sorted(chosen))

    # root and weight functions

    def _table(self, I: Facet) -> tuple:
        I = tuple(I)
        cached = self._tables.get(I)
        if cached is not None:
            return cached
        R = self.R
        Iset = set(I)
        m = identity(R.n)
        roots, weights = [], []
        for k, q in enumerate(self.Q, start=1):
            roots.append(tuple(r[q - 1] for r in m))
            weights.append(mat_vec(m, R.fundamental_weight(q)))
            if k not in Iset:
                m = R.right_multiply(m, q)
        out = (tuple(roots), tuple(weights))
        with self._lock:
            self._tables.setdefault(I, out)
        return out

    def roots(self, I: Facet) -> tuple:
        """``r(I, k)`` for k = 1..m, in root coordinates."""
        return self._table(I)[0]

    def weights(self, I: Facet) -> tuple:
        """``w(I, k)`` for k = 1..m, in root coordinates."""
        return self._table(I)[1]

    def root_function(self, I: Facet, k: int) -> tuple:
        return self.roots(I)[k - 1]

    def weight_function(self, I: Facet, k: int) -> tuple:
        return self.weights(I)[k - 1]

    # flips

    def flip(self, I: Facet, i: int) -> tuple:
        """Flip position ``i`` out of ``I``; returns ``(J, j)``."""
        I = tuple(I)
        if i not in I:
            raise ValueError(f"{i} is not in facet {I}")
        roots = self.roots(I)
        r = roots[i - 1]
        neg = tuple(-x for x in r)
        rest = [k for k in I if k != i]
        candidates = [k for k in range(1, self.m + 1)
                      if k not in I and roots[k - 1] in (r, neg)]
        others = [k for k in range(1, self.m + 1) if k not in I and k not in candidates]
        for j in candidates + others:
            J = tuple(sorted(rest + [j]))
            if self.is_facet(J):
                return J, j
        raise AssertionError(f"no flip of {i} in {I}; the complex is not spherical")

    def facets(self) -> list:
        """All facets by breadth-first search along flips from the greedy facet."""
        start = self.greedy_facet()
        seen = {start}
        queue = deque([start])
        while queue:
            I = queue.popleft()
            for i in I:
                J, _ = self.flip(I, i)
                if J not in seen:
                    seen.add(J)
                    queue.append(J)
        return sorted(seen)

    def facets_brute_force(self) -> list:
        """All facets by testing every subset of the right size."""
        return [I for I in itertools.combinations(range(1, self.m + 1), self.facet_size)
                if self.is_facet(I)]

    def increasing_flips(self) -> list:
        """Cover relations ``(I, J)`` of the increasing-flip poset."""
        out = []
        for I in self.facets():
            for i in I:
                J, j = self.flip(I, i)
                if i < j:
                    out.append((I, J))
        return out

    def canonical_long_flip_sequence(self) -> FlipSequence:
        """Greedy to antigreedy, the l-th flip bringing in position n + l."""
        if self.m != self.n + self.N:
            raise NotClusterWord(f"word of length {self.m} is not of the form c w0(c)")
        I = self.greedy_facet()
        facets, pivots = [I], []
        for step in range(1, self.N + 1):
            j = self.n + step
            if j in I:
                raise NotClusterWord(f"position {j} already in {I}")
            for i in I:
                J, jj = self.flip(I, i)
                if jj == j:
                    break
            else:
                raise NotClusterWord(f"no flip of {I} brings in position {j}")
            facets.append(J)
            pivots.append((i, j))
            I = J
        if I != self.antigreedy_facet():
            raise NotClusterWord("canonical flip sequence does not end at the antigreedy facet")
        return FlipSequence(tuple(facets), tuple(pivots))

    # predicates

    def is_root_independent(self) -> bool:
        I = self.greedy_facet()
        rs = [self.root_function(I, i) for i in I]
        return rank(rs) == len(rs)

    def has_full_support(self) -> bool:
        return not self.unsupported_positions()

    def unsupported_positions(self) -> list:
        used = set()
        for I in self.facets():
            used.update(I)
        return [k for k in range(1, self.m + 1) if k not in used]
