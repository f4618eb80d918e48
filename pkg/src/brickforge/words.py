"""Non-cluster words: column polytopes of arbitrary words, commutation
classes, and an exhaustive scan comparing root-independence plus full
support with being a cluster word."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .brick import BrickGeometry
from .coxeter import RootSystem
from .errors import DemazureTooShort
from .subword import SubwordComplex


def commutation_normal_form(R: RootSystem, word: Sequence[int]) -> tuple:
    """Lexicographically smallest word reachable by swapping adjacent
    commuting letters.

    Repeatedly moves to the front the smallest letter that commutes with,
    and differs from, every letter before it.
    """
    rest = list(word)
    out = []
    while rest:
        best = None
        for i, s in enumerate(rest):
            if best is not None and s >= rest[best]:
                continue
            if all(t != s and R.commutes(s, t) for t in rest[:i]):
                best = i
        out.append(rest.pop(best))
    return tuple(out)


def commutation_equivalent(R: RootSystem, u: Sequence[int], v: Sequence[int]) -> bool:
    return commutation_normal_form(R, u) == commutation_normal_form(R, v)


@dataclass
class WordReport:
    word: tuple
    facets: list
    greedy_roots: list
    unsupported: list
    root_independent: bool
    columns: dict  # position -> sorted vertex list
    brick_vertices: list


def word_report(R: RootSystem, word: Sequence[int]) -> WordReport:
    sc = SubwordComplex(R, word)
    bg = BrickGeometry(sc)
    g = sc.greedy_facet()
    cols = {k: sorted(bg.column_polytope(k).vertices) for k in range(1, sc.m + 1)}
    return WordReport(tuple(word), bg.facets, [sc.root_function(g, i) for i in g],
                      sc.unsupported_positions(), sc.is_root_independent(), cols,
                      sorted(bg.asso_polytope().vertices))


@dataclass
class ScanReport:
    rank_type: str
    max_length: int
    words_checked: int = 0
    truncated: bool = False
    # root-independent with full support but not a cluster word
    unexpected: list = field(default_factory=list)
    # cluster words failing root-independence or full support
    missing: list = field(default_factory=list)


def cluster_word_classes(R: RootSystem) -> set:
    out = set()
    for c in itertools.permutations(range(1, R.n + 1)):
        out.add(commutation_normal_form(R, tuple(c) + R.sorting_word(c)))
    return out


def scan_conjecture(R: RootSystem, max_length: int, budget_seconds: Optional[float] = None,
                    name: str = "") -> ScanReport:
    """Check every word up to ``max_length`` whose Demazure product is w0."""
    rep = ScanReport(name or repr(R), max_length)
    if max_length < R.N:
        return rep
    classes = cluster_word_classes(R)
    start = time.monotonic()
    for length in range(R.N, max_length + 1):
        for word in itertools.product(range(1, R.n + 1), repeat=length):
            if budget_seconds is not None and time.monotonic() - start > budget_seconds:
                rep.truncated = True
                return rep
            try:
                sc = SubwordComplex(R, word)
            except DemazureTooShort:
                continue
            rep.words_checked += 1
            good = sc.is_root_independent() and sc.has_full_support()
            cluster = commutation_normal_form(R, word) in classes
            if good and not cluster:
                rep.unexpected.append(word)
            elif cluster and not good:
                rep.missing.append(word)
    return rep
