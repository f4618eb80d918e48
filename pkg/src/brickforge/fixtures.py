"""Reference tables shipped as package data, and decoders for their cell notation.

Cells keep the typeset digit-string notation: ``1\\mi{1}00`` is the
vector ``(1, -1, 0, 0)``, ``\\mii{321}`` negates every digit, ``\\D{343}``
marks root coordinates, and ``\\tfrac{1}{4}`` scales the vector after it.
A fixture directory given on the command line replaces the shipped one.
"""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Optional

from .cluster import variable_names, y_names
from .laurent import LaurentExpr, parse_polynomial

_NEG = re.compile(r"\\mii?\{([0-9]+)\}")


def decode_digits(cell: str) -> tuple:
    """Decode a digit string such as ``1\\mi{1}00`` or ``\\mii{12}``."""
    s = cell.strip().strip("$")
    s = re.sub(r"_\\(Delta|nabla)", "", s)
    out = []
    pos = 0
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        m = _NEG.match(s, pos)
        if m:
            out.extend(-int(d) for d in m.group(1))
            pos = m.end()
        elif s[pos].isdigit():
            out.append(int(s[pos]))
            pos += 1
        else:
            raise ValueError(f"cannot decode {cell!r} at {s[pos:]!r}")
    return tuple(out)


def decode_scaled(cell: str) -> tuple:
    """Decode ``\\tfrac{a}{b} <digits>`` or ``\\hspace{..} <digits>``."""
    s = re.sub(r"\\hspace\{[^}]*\}", "", cell.strip().strip("$"))
    m = re.match(r"\s*\\tfrac\{(\d+)\}\{(\d+)\}\s*(.*)$", s)
    if m:
        k = Fraction(int(m.group(1)), int(m.group(2)))
        return tuple(k * x for x in decode_digits(m.group(3)))
    return decode_digits(s)


def split_pair(cell: str) -> tuple:
    """``'<a> = \\D{<b>}'`` -> ``(decoded a, decoded b)``."""
    left, right = cell.split("=")
    right = right.strip()
    m = re.match(r"\\D\{(.*)\}$", right)
    return decode_digits(left), decode_digits(m.group(1) if m else right)


def decode_facet(cell: str) -> tuple:
    cell = cell.strip()
    if "," in cell:
        return tuple(int(x) for x in cell.strip("{}").split(","))
    return tuple(int(ch) for ch in cell if ch.isdigit())


# loading

def fixture_dir(override: Optional[str | Path] = None):
    if override is not None:
        return Path(override)
    return resources.files("brickforge") / "fixtures"


def load_tsv(name: str, directory=None) -> list:
    """Rows of a tab-separated fixture as dicts keyed by the header."""
    path = fixture_dir(directory) / name
    with path.open(newline="") as fh:
        return list(csv.DictReader(fh, delimiter="\t"))


def exists(name: str, directory=None) -> bool:
    return (fixture_dir(directory) / name).is_file()


@dataclass(frozen=True)
class ClusterRow:
    label: str
    expr: LaurentExpr
    d_vector: tuple
    g_vector: tuple  # weight coordinates
    g_root: tuple  # the printed root-coordinate form
    f_polynomial: Optional[LaurentExpr]


def _parse_variable(cell: str, n: int) -> tuple:
    s = cell.strip().strip("$")
    names = variable_names(n)
    m = re.match(r"(x_\d+)\s*(?:=\s*(.*))?$", s)
    label = m.group(1)
    body = m.group(2)
    if body is None:
        i = int(label.split("_")[1]) - 1
        return label, LaurentExpr.variable(i, names)
    fm = re.match(r"\\frac\{(.*)\}\{(.*)\}$", body)
    num = parse_polynomial(fm.group(1), names)
    den = parse_polynomial(fm.group(2), names)
    (e, _), = den.terms.items()
    return label, num.shift(tuple(-x for x in e))


def parse_cluster_row(row: dict) -> ClusterRow:
    d = decode_digits(row["d"])
    n = len(d)
    label, expr = _parse_variable(row["variable"], n)
    g_cell = row["g"].strip().strip("$")
    nabla, root = g_cell.split("=", 1)
    f_cell = row["F"].strip().strip("$")
    f = None
    if f_cell:
        f = parse_polynomial(f_cell.split("=", 1)[1], y_names(n))
    return ClusterRow(label, expr, d, decode_digits(nabla), decode_scaled(root), f)


def cluster_rows(type_name: str, directory=None) -> list:
    return [parse_cluster_row(r) for r in load_tsv("cluster_variables.tsv", directory)
            if r["type"] == type_name]


@dataclass(frozen=True)
class Erratum:
    fixture: str
    key: str
    printed: str
    corrected: str
    note: str


def errata(directory=None) -> list:
    if not exists("errata.tsv", directory):
        return []
    return [Erratum(r["fixture"], r["key"], r["printed"], r["corrected"], r["note"])
            for r in load_tsv("errata.tsv", directory)]


def erratum_for(fixture: str, key: str, directory=None) -> Optional[Erratum]:
    for e in errata(directory):
        if e.fixture == fixture and e.key == key:
            return e
    return None
