"""Sparse Laurent polynomials with exact coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import NonLaurent
from .linalg import normalize


class LaurentExpr:
    """A Laurent polynomial as a map exponent-tuple -> nonzero coefficient.

    ``names`` labels the variables for printing; all operands of an
    arithmetic operation must share them.
    """

    __slots__ = ("terms", "names", "_key")

    def __init__(self, terms: Mapping[tuple, object], names: Sequence[str]):
        self.names = tuple(names)
        self.terms = {tuple(e): normalize(c) for e, c in terms.items() if c}
        self._key = None

    # constructors

    @classmethod
    def zero(cls, names) -> "LaurentExpr":
        return cls({}, names)

    @classmethod
    def constant(cls, c, names) -> "LaurentExpr":
        return cls({(0,) * len(names): c}, names)

    @classmethod
    def monomial(cls, exponent: Sequence[int], names, coeff=1) -> "LaurentExpr":
        return cls({tuple(exponent): coeff}, names)

    @classmethod
    def variable(cls, i: int, names) -> "LaurentExpr":
        e = [0] * len(names)
        e[i] = 1
        return cls.monomial(e, names)

    # arithmetic

    def _same(self, other):
        if self.names != other.names:
            raise ValueError("operands live in different rings")

    def __add__(self, other: "LaurentExpr") -> "LaurentExpr":
        self._same(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentExpr(out, self.names)

    def __neg__(self):
        return LaurentExpr({e: -c for e, c in self.terms.items()}, self.names)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "LaurentExpr") -> "LaurentExpr":
        self._same(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentExpr(out, self.names)

    def __pow__(self, k: int) -> "LaurentExpr":
        if k < 0:
            raise ValueError("negative powers are not Laurent in general")
        out = LaurentExpr.constant(1, self.names)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def shift(self, exponent: Sequence[int]) -> "LaurentExpr":
        """Multiply by the monomial with the given exponent."""
        return LaurentExpr({tuple(a + b for a, b in zip(e, exponent)): c
                            for e, c in self.terms.items()}, self.names)

    def min_exponents(self) -> tuple:
        return tuple(min(e[i] for e in self.terms) for i in range(len(self.names)))

    def exact_divide(self, other: "LaurentExpr") -> "LaurentExpr":
        """Quotient of an exact division; raises :class:`NonLaurent` otherwise."""
        self._same(other)
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.terms:
            return self
        a0 = self.min_exponents()
        b0 = other.min_exponents()
        neg_a = tuple(-x for x in a0)
        neg_b = tuple(-x for x in b0)
        num = {tuple(x + y for x, y in zip(e, neg_a)): c for e, c in self.terms.items()}
        den = {tuple(x + y for x, y in zip(e, neg_b)): c for e, c in other.terms.items()}
        lead = max(den)
        lead_c = den[lead]
        den_items = list(den.items())
        quo: dict = {}
        rem = num
        while rem:
            e = max(rem)
            q = tuple(x - y for x, y in zip(e, lead))
            if min(q) < 0:
                raise NonLaurent("division is not exact")
            c = rem[e]
            qc = Fraction(c, lead_c) if isinstance(c, int) and isinstance(lead_c, int) else c / lead_c
            qc = normalize(qc)
            quo[q] = qc
            for de, dc in den_items:
                t = tuple(x + y for x, y in zip(q, de))
                v = rem.get(t, 0) - qc * dc
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        shift = tuple(x - y for x, y in zip(a0, b0))
        return LaurentExpr(quo, self.names).shift(shift)

    # comparisons

    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple(sorted(self.terms.items()))
        return self._key

    def __eq__(self, other):
        return isinstance(other, LaurentExpr) and self.names == other.names and self.terms == other.terms

    def __hash__(self):
        return hash(self.key())

    def __len__(self):
        return len(self.terms)

    def support(self) -> list:
        return sorted(self.terms)

    def coefficient(self, exponent) -> object:
        return self.terms.get(tuple(exponent), 0)

    def is_laurent_positive(self) -> bool:
        return all(isinstance(c, int) and c > 0 for c in self.terms.values())

    # substitutions

    def restrict(self, keep: Sequence[int], names=None, set_to_one: bool = True) -> "LaurentExpr":
        """Keep the variables at indices ``keep``; the others are set to 1."""
        out: dict = {}
        for e, c in self.terms.items():
            k = tuple(e[i] for i in keep)
            out[k] = out.get(k, 0) + c
        return LaurentExpr(out, names or tuple(self.names[i] for i in keep))

    def set_zero(self, indices: Iterable[int]) -> "LaurentExpr":
        """Substitute 0 for the variables at ``indices`` (they must not
        appear with negative exponent)."""
        idx = list(indices)
        out = {}
        for e, c in self.terms.items():
            if any(e[i] < 0 for i in idx):
                raise NonLaurent("cannot set a variable with negative exponent to zero")
            if all(e[i] == 0 for i in idx):
                out[e] = c
        return LaurentExpr(out, self.names)

    # printing

    def format_monomial(self, e: Sequence[int]) -> str:
        parts = []
        for name, k in zip(self.names, e):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        return "".join(parts)

    def numerator_denominator(self) -> tuple:
        """``(numerator, denominator exponent)`` with the numerator a polynomial."""
        low = self.min_exponents() if self.terms else (0,) * len(self.names)
        den = tuple(max(0, -x) for x in low)
        return self.shift(den), den

    def format_polynomial(self) -> str:
        """Terms ordered by decreasing total degree, then reverse lex."""
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))
        out = []
        for e, c in items:
            mono = self.format_monomial(e)
            if not mono:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{c}{mono}"
            out.append(s)
        return " + ".join(out).replace("+ -", "- ")

    def __str__(self):
        num, den = self.numerator_denominator()
        top = num.format_polynomial()
        bottom = self.format_monomial(den)
        if not bottom:
            return top
        if len(num) > 1:
            top = f"({top})"
        return f"{top}/{bottom}"

    def __repr__(self):
        return f"LaurentExpr({self})"


_TERM = re.compile(r"([a-zA-Z]+_?\{?\d+\}?)(?:\^\{?(\d+)\}?)?")


def parse_polynomial(text: str, names: Sequence[str]) -> LaurentExpr:
    """Parse a sum of monomials written like ``2x_1y_1y_2^2 + y_1 + 1``.

    Variable tokens are matched after removing ``_``, braces and spaces.
    """
    names = tuple(names)
    lookup = {re.sub(r"[_{}]", "", n): i for i, n in enumerate(names)}
    terms: dict = {}
    text = text.replace(" ", "").replace("-", "+-")
    for tok in filter(None, text.split("+")):
        sign = -1 if tok.startswith("-") else 1
        tok = tok.lstrip("-")
        m = re.match(r"^(\d+)", tok)
        coeff = int(m.group(1)) if m else 1
        rest = tok[m.end():] if m else tok
        e = [0] * len(names)
        pos = 0
        while pos < len(rest):
            mm = _TERM.match(rest, pos)
            if not mm:
                raise ValueError(f"cannot parse monomial {tok!r}")
            var = re.sub(r"[_{}]", "", mm.group(1))
            if var not in lookup:
                raise ValueError(f"unknown variable {var!r}")
            e[lookup[var]] += int(mm.group(2) or 1)
            pos = mm.end()
        e = tuple(e)
        terms[e] = terms.get(e, 0) + sign * coeff
    return LaurentExpr(terms, names)
