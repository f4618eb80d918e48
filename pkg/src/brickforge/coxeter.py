"""Finite crystallographic root systems and their Weyl groups.

Every vector is stored in coordinates with respect to the simple roots.
A Weyl group element is an integer matrix whose column ``j`` holds the
root coordinates of the image of the ``j``-th simple root.  Letters of
words are 1-based, as in the usual Dynkin labelling.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidCartanType
from .linalg import determinant, inverse, mat_vec, normalize

Vector = tuple  # tuple of int / Fraction
Matrix = tuple  # tuple of row tuples
Word = tuple  # tuple of 1-based letters

_VALID_RANKS = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 4,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        ok = _VALID_RANKS.get(self.family)
        if ok is None or not ok(self.rank):
            raise InvalidCartanType(f"no finite root system of type {self.family}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        text = text.strip().upper()
        if len(text) < 2 or not text[1:].isdigit():
            raise InvalidCartanType(f"cannot parse Cartan type {text!r}")
        return cls(text[0], int(text[1:]))

    def __str__(self):
        return f"{self.family}{self.rank}"


def _chain_edges(n):
    return [(i, i + 1) for i in range(1, n)]


def build_cartan(t: CartanType) -> Matrix:
    """Cartan matrix in Bourbaki labelling.

    Entry ``a[s][t]`` is defined by ``s(alpha_t) = alpha_t - a[s][t] alpha_s``,
    i.e. ``a_st = 2 (alpha_s, alpha_t) / (alpha_s, alpha_s)``.
    """
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(s, u, a_su=-1, a_us=-1):
        a[s - 1][u - 1] = a_su
        a[u - 1][s - 1] = a_us

    f = t.family
    if f == "A":
        for s, u in _chain_edges(n):
            bond(s, u)
    elif f == "B":
        for s, u in _chain_edges(n - 1):
            bond(s, u)
        bond(n - 1, n, -1, -2)  # alpha_n short
    elif f == "C":
        for s, u in _chain_edges(n - 1):
            bond(s, u)
        bond(n - 1, n, -2, -1)  # alpha_n long
    elif f == "D":
        for s, u in _chain_edges(n - 1):
            bond(s, u)
        bond(n - 2, n)
    elif f == "E":
        bond(1, 3)
        bond(2, 4)
        for s in range(3, n):
            bond(s, s + 1)
    elif f == "F":
        bond(1, 2)
        bond(2, 3, -1, -2)
        bond(3, 4)
    elif f == "G":
        bond(1, 2, -3, -1)  # alpha_1 short
    return tuple(tuple(row) for row in a)


def symmetrizer(cartan: Matrix) -> tuple:
    """Minimal positive integers ``d`` with ``d_s a_st = d_t a_ts``.

    ``d_s`` is proportional to the squared length of ``alpha_s``.
    """
    n = len(cartan)
    d: list = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            s = stack.pop()
            for u in range(n):
                if u != s and cartan[s][u] != 0 and d[u] is None:
                    d[u] = d[s] * Fraction(cartan[s][u], cartan[u][s])
                    stack.append(u)
    lcm = 1
    for x in d:
        lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in d]
    g = 0
    for x in ints:
        g = _gcd(g, x)
    return tuple(x // g for x in ints)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def is_positive(v: Sequence) -> bool:
    """Nonzero with all coordinates nonnegative."""
    return all(x >= 0 for x in v) and any(x != 0 for x in v)


def is_negative(v: Sequence) -> bool:
    return all(x <= 0 for x in v) and any(x != 0 for x in v)


class RootSystem:
    """Cartan data together with the derived root system and Weyl group."""

    def __init__(self, cartan: Matrix | CartanType | str):
        if isinstance(cartan, str):
            cartan = CartanType.parse(cartan)
        self.cartan_type = cartan if isinstance(cartan, CartanType) else None
        if isinstance(cartan, CartanType):
            cartan = build_cartan(cartan)
        self.cartan: Matrix = tuple(tuple(int(x) for x in row) for row in cartan)
        self.n = len(self.cartan)
        _check_cartan(self.cartan)

    def __repr__(self):
        name = self.cartan_type or self.cartan
        return f"RootSystem({name})"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.cartan == other.cartan

    def __hash__(self):
        return hash(self.cartan)

    # basic vectors

    def simple_root(self, i: int) -> Vector:
        return tuple(int(j == i - 1) for j in range(self.n))

    @cached_property
    def cartan_inverse(self) -> Matrix:
        return inverse(self.cartan)

    def fundamental_weight(self, i: int) -> Vector:
        """Root coordinates of the ``i``-th fundamental weight (column of C^-1)."""
        return tuple(row[i - 1] for row in self.cartan_inverse)

    def weight_coords(self, v: Sequence) -> Vector:
        """Fundamental-weight coordinates ``C v`` of a vector in root coordinates."""
        return mat_vec(self.cartan, v)

    def root_coords(self, d: Sequence) -> Vector:
        """Inverse of :meth:`weight_coords`."""
        return mat_vec(self.cartan_inverse, d)

    @cached_property
    def symmetrizer(self) -> tuple:
        return symmetrizer(self.cartan)

    def coweight_coords(self, v: Sequence) -> Vector:
        """Coordinates of ``v`` in the basis dual to the simple roots.

        Pairing these with root coordinates by the plain dot product is
        (up to a global scalar) the invariant inner product.
        """
        d = self.weight_coords(v)
        return tuple(s * x for s, x in zip(self.symmetrizer, d))

    def pairing(self, u: Sequence, v: Sequence):
        """Invariant inner product of two vectors given in root coordinates."""
        return sum(a * b for a, b in zip(self.coweight_coords(u), v))

    # reflections and group elements

    def reflect(self, i: int, v: Sequence) -> Vector:
        """Apply the simple reflection ``s_i`` to root coordinates ``v``."""
        row = self.cartan[i - 1]
        d = sum(a * x for a, x in zip(row, v))
        if not d:
            return tuple(v)
        out = list(v)
        out[i - 1] = v[i - 1] - d
        return tuple(normalize(x) for x in out)

    @cached_property
    def simple_reflections(self) -> tuple:
        mats = []
        for i in range(1, self.n + 1):
            cols = [self.reflect(i, self.simple_root(j)) for j in range(1, self.n + 1)]
            mats.append(tuple(zip(*cols)))
        return tuple(mats)

    def reflection_matrix(self, i: int) -> Matrix:
        return self.simple_reflections[i - 1]

    def element(self, word: Iterable[int]) -> Matrix:
        """Group element of the product ``q_1 q_2 ... q_k``."""
        m = identity(self.n)
        for s in word:
            m = self.right_multiply(m, s)
        return m

    def right_multiply(self, m: Matrix, s: int) -> Matrix:
        """``m * s_s``; only column ``s`` changes."""
        row = self.cartan[s - 1]
        # (m s)(alpha_j) = m(alpha_j) - a_sj m(alpha_s)
        ms = [r[s - 1] for r in m]
        return tuple(
            tuple(r[j] - row[j] * ms[k] for j in range(self.n))
            for k, r in enumerate(m)
        )

    def act(self, word: Iterable[int], v: Sequence) -> Vector:
        """Apply the product of the letters of ``word`` to ``v``.

        The rightmost letter acts first.  Works for any vector given in
        root coordinates (roots and weights alike).
        """
        out = tuple(v)
        for s in reversed(tuple(word)):
            out = self.reflect(s, out)
        return out

    # roots

    @cached_property
    def positive_roots(self) -> tuple:
        """All positive roots, ordered by height, ties broken lexicographically."""
        seen = {self.simple_root(i) for i in range(1, self.n + 1)}
        frontier = list(seen)
        while frontier:
            v = frontier.pop()
            for i in range(1, self.n + 1):
                w = self.reflect(i, v)
                if w not in seen and is_positive(w):
                    seen.add(w)
                    frontier.append(w)
            if len(seen) > 10_000:
                raise InvalidCartanType("root system is not finite")
        return tuple(sorted(seen, key=lambda b: (sum(b), b)))

    @cached_property
    def root_index(self) -> dict:
        return {b: k for k, b in enumerate(self.positive_roots)}

    @property
    def N(self) -> int:
        return len(self.positive_roots)

    def is_root(self, v: Sequence) -> bool:
        v = tuple(v)
        return v in self.root_index or tuple(-x for x in v) in self.root_index

    def length(self, m: Matrix) -> int:
        """Number of positive roots sent to negative roots."""
        return sum(1 for b in self.positive_roots if is_negative(mat_vec(m, b)))

    def is_reduced(self, word: Sequence[int]) -> bool:
        m = identity(self.n)
        for s in word:
            if not is_positive(tuple(r[s - 1] for r in m)):
                return False
            m = self.right_multiply(m, s)
        return True

    @cached_property
    def longest_element(self) -> Matrix:
        """Greedy ascent, smallest ascending letter first."""
        m = identity(self.n)
        while True:
            for s in range(1, self.n + 1):
                if is_positive(tuple(r[s - 1] for r in m)):
                    m = self.right_multiply(m, s)
                    break
            else:
                return m

    def sorting_word(self, c: Sequence[int]) -> Word:
        """The c-sorting word of the longest element.

        Scans ``c c c ...`` and keeps a letter whenever it is a right ascent
        of the product of the letters kept so far.
        """
        _check_coxeter_word(self.n, c)
        m = identity(self.n)
        out = []
        while len(out) < self.N:
            for s in c:
                if is_positive(tuple(r[s - 1] for r in m)):
                    m = self.right_multiply(m, s)
                    out.append(s)
        return tuple(out)

    def coxeter_elements(self) -> list:
        """One reduced word per Coxeter element, the lexicographically
        smallest ordering of the letters producing it."""
        seen = set()
        out = []
        for perm in itertools.permutations(range(1, self.n + 1)):
            m = self.element(perm)
            if m not in seen:
                seen.add(m)
                out.append(tuple(perm))
        return out

    def commutes(self, s: int, t: int) -> bool:
        return s != t and self.cartan[s - 1][t - 1] == 0


def _check_cartan(a: Matrix):
    n = len(a)
    for i in range(n):
        if len(a[i]) != n:
            raise InvalidCartanType("Cartan matrix must be square")
        if a[i][i] != 2:
            raise InvalidCartanType("Cartan matrix needs 2 on the diagonal")
        for j in range(n):
            if i != j and (a[i][j] > 0 or (a[i][j] == 0) != (a[j][i] == 0)):
                raise InvalidCartanType("off-diagonal Cartan entries are inconsistent")
    for k in range(1, n + 1):
        if determinant([row[:k] for row in a[:k]]) <= 0:
            raise InvalidCartanType("Cartan matrix is not of finite type")


def _check_coxeter_word(n: int, c: Sequence[int]):
    if sorted(c) != list(range(1, n + 1)):
        raise ValueError(f"{tuple(c)} is not a Coxeter word in {n} letters")


def parse_word(text: str) -> Word:
    """Parse ``"1,2,3"``, ``"1 2 3"`` or ``"123"`` (single-digit letters)."""
    text = text.strip()
    if "," in text or " " in text:
        return tuple(int(x) for x in text.replace(",", " ").split())
    return tuple(int(ch) for ch in text)


def format_word(word: Sequence[int]) -> str:
    if all(s < 10 for s in word):
        return "".join(str(s) for s in word)
    return ",".join(str(s) for s in word)
