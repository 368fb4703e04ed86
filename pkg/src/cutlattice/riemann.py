"""Spherical representations (m/i, n/j) of the nine regular polyhedra.

A representation takes the cells of a regular polyhedron as star polygons
m/i and the vertex figures as n/j; it wraps the sphere

    density = E * (i/m + j/n - 1/2)

times, E the edge count of the underlying abstract polyhedron.  The table
of existing pairs and their densities is stored data; the densities are
recomputed from the formula and must match.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import gcd


class TableError(ValueError):
    pass


@dataclass(frozen=True)
class Base:
    name: str
    V: int
    E: int
    F: int
    symbol: str | None = None

    @property
    def euler(self) -> int:
        return self.V - self.E + self.F


def parse_polygon(text) -> tuple[int, int]:
    """``'5/2'`` or ``(5, 2)`` -> (5, 2)."""
    if isinstance(text, tuple):
        m, i = text
    else:
        s = str(text).strip()
        m, _, i = s.partition("/")
        i = i or "1"
        m, i = int(m), int(i)
    if m < 2 or i < 1:
        raise TableError(f"bad polygon {text!r}")
    return m, i


@dataclass(frozen=True)
class RepresentationEntry:
    cell: tuple[int, int]
    vertex_figure: tuple[int, int]
    base: Base
    stored_density: int | None = None

    @property
    def density(self) -> int:
        return density(self.cell, self.vertex_figure, self.base.E)

    @property
    def genus(self) -> int:
        return genus(self.base)

    def label(self) -> str:
        return f"({self.cell[0]}/{self.cell[1]}, {self.vertex_figure[0]}/{self.vertex_figure[1]})"

    def to_dict(self) -> dict:
        return {"cell": f"{self.cell[0]}/{self.cell[1]}",
                "vertex_figure": f"{self.vertex_figure[0]}/{self.vertex_figure[1]}",
                "base": self.base.name, "V": self.base.V, "E": self.base.E, "F": self.base.F,
                "density": self.density, "genus": self.genus}


def density(cell, vertex_figure, edges: int) -> int:
    """``E * (i/m + j/n - 1/2)`` in exact arithmetic; must be a positive integer.

    Polygons ``m/(i + t m)`` are allowed and go through the same formula.
    """
    m, i = parse_polygon(cell)
    n, j = parse_polygon(vertex_figure)
    val = edges * (Fraction(i, m) + Fraction(j, n) - Fraction(1, 2))
    if val.denominator != 1 or val <= 0:
        raise TableError(f"density of ({m}/{i}, {n}/{j}) with E={edges} is {val}, not a positive integer")
    return int(val)


def genus(base: Base) -> int:
    chi = base.euler
    if chi % 2:
        raise TableError(f"{base.name} has odd Euler characteristic {chi}")
    g = (2 - chi) // 2
    if g < 0:
        raise TableError(f"{base.name} has negative genus")
    return g


@lru_cache(maxsize=None)
def _load_default():
    return json.loads(resources.files("cutlattice").joinpath("data/table2.json").read_text())


def load_table(path=None) -> dict:
    if path is None:
        return _load_default()
    with open(path) as fh:
        return json.load(fh)


def bases(data: dict | None = None) -> dict[str, Base]:
    data = data or load_table()
    return {name: Base(name, b["V"], b["E"], b["F"], b.get("symbol")) for name, b in data["bases"].items()}


def enumerate_table2(data: dict | None = None) -> list[RepresentationEntry]:
    """The 36 representations, row by row; raises with a diff on any mismatch."""
    data = data or load_table()
    bs = bases(data)
    out, diffs = [], []
    for e in data["entries"]:
        if e["base"] not in bs:
            raise TableError(f"unknown base {e['base']!r}")
        ent = RepresentationEntry(parse_polygon(e["cell"]), parse_polygon(e["vertex_figure"]),
                                  bs[e["base"]], e.get("density"))
        try:
            got = ent.density
        except TableError as exc:
            diffs.append(f"{ent.label()}: {exc}")
            continue
        if ent.stored_density is not None and got != ent.stored_density:
            diffs.append(f"{ent.label()}: computed {got}, table {ent.stored_density}")
        out.append(ent)
    if diffs:
        raise TableError("table mismatch:\n  " + "\n  ".join(diffs))
    return out


def lookup(cell, vertex_figure, data: dict | None = None) -> RepresentationEntry:
    c, v = parse_polygon(cell), parse_polygon(vertex_figure)
    for ent in enumerate_table2(data):
        if ent.cell == c and ent.vertex_figure == v:
            return ent
    if c == (2, 1) or v == (2, 1):
        return doubled_polygon(cell, vertex_figure)
    raise TableError(f"({c[0]}/{c[1]}, {v[0]}/{v[1]}) is not a listed representation")


def doubled_polygon(cell, vertex_figure) -> RepresentationEntry:
    """Digon families: (2/1, m/i) on the m-gonal hosohedron, (m/i, 2/1) on the dihedron."""
    c, v = parse_polygon(cell), parse_polygon(vertex_figure)
    if c == (2, 1):
        m, i = v
        base = Base(f"hosohedron {{2,{m}}}", 2, m, m)
    elif v == (2, 1):
        m, i = c
        base = Base(f"dihedron {{{m},2}}", m, m, 2)
    else:
        raise TableError("one of the polygons must be 2/1")
    if gcd(m, i) != 1 or i >= m:
        raise TableError(f"{m}/{i} is not a polygon with coprime 1 <= i < m")
    return RepresentationEntry(c, v, base)


def doubled_entries(data: dict | None = None) -> list[RepresentationEntry]:
    """The 2/1 row and column of the table, checked against the stored values."""
    data = data or load_table()
    out = []
    for key, table in (("doubled_row", True), ("doubled_column", False)):
        for poly, stored in data[key].items():
            ent = doubled_polygon("2/1", poly) if table else doubled_polygon(poly, "2/1")
            if ent.density != stored:
                raise TableError(f"{ent.label()}: computed {ent.density}, table {stored}")
            out.append(ent)
    return out


def format_table(entries: list[RepresentationEntry]) -> str:
    """Aligned text grid, cells as rows and vertex figures as columns."""
    order = ["2/1", "3/1", "3/2", "4/1", "4/3", "5/1", "5/4", "5/2", "5/3"]
    grid: dict[tuple[str, str], int] = {}
    for e in entries:
        grid[(f"{e.cell[0]}/{e.cell[1]}", f"{e.vertex_figure[0]}/{e.vertex_figure[1]}")] = e.density
    rows = [r for r in order if any(k[0] == r for k in grid)]
    cols = [c for c in order if any(k[1] == c for k in grid)]
    lines = ["     " + "".join(f"{c:>5}" for c in cols)]
    for r in rows:
        lines.append(f"{r:>5}" + "".join(f"{grid.get((r, c), ''):>5}" for c in cols))
    return "\n".join(lines)
