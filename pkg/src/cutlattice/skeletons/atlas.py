"""Embeddability status of the regular tilings, honeycombs and star-polytopes.

Rank-2 symbols are decided by rule (the families are infinite); ranks 3-5
come from the bundled ``data/atlas.json``; ranks >= 6 only contain the
simplex, cross-polytope, cube and cubic-lattice families.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

from ..schlafli import (
    EUCLIDEAN, INF, SPHERICAL, SchlafliError, SchlafliSymbol, as_symbol, classify, format_symbol,
)

EMBEDDABLE = "embeddable"
NON_EMBEDDABLE = "non-embeddable"
OUT_OF_CATALOG = "out-of-catalog"


class AtlasError(ValueError):
    pass


@dataclass(frozen=True)
class AtlasStatus:
    symbol: str
    status: str
    target: str | None = None
    scale: int | None = None
    dim: int | str | None = None
    reason: str | None = None
    detail: str | None = None
    source: str = "rule"
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def embeddable(self) -> bool:
        return self.status == EMBEDDABLE

    def to_dict(self) -> dict:
        d = {k: v for k, v in asdict(self).items() if v is not None and k != "extra"}
        d.update(self.extra)
        return d


def _emb(sym, target, scale, dim, reason, detail=None):
    return AtlasStatus(sym, EMBEDDABLE, target, scale, dim, reason, detail)


def _non(sym, reason, detail=None):
    return AtlasStatus(sym, NON_EMBEDDABLE, reason=reason, detail=detail)


def _half_h(sym, m, reason, detail=None):
    return _emb(sym, f"½H_{m}", 2, m, reason, detail)


def _rank2(sym: SchlafliSymbol) -> AtlasStatus:
    text = format_symbol(sym)
    a, b = sym.entries
    if not sym.is_convex:
        stars = {
            "{5/2,5}": _half_h(text, 6, "skeleton", "icosahedron skeleton"),
            "{5,5/2}": _half_h(text, 6, "skeleton", "icosahedron skeleton"),
            "{3,5/2}": _half_h(text, 6, "skeleton", "icosahedron skeleton"),
            "{5/2,3}": _half_h(text, 10, "skeleton", "dodecahedron skeleton"),
        }
        if text in stars:
            return stars[text]
        # {m/2, m} and {m, m/2} for odd m >= 7
        if a is not INF and b is not INF:
            if a.q == 2 and b.q == 1 and a.p == b.p and a.p % 2 == 1 and a.p >= 7:
                return _non(text, "girth-balanced-arcs",
                            f"girth {a.p - 1} of the skeleton contradicts balanced arcs")
            if a.q == 1 and b.q == 2 and a.p == b.p and a.p % 2 == 1 and a.p >= 7:
                return _emb(text, "½Z_inf", 2, "inf", "skeleton", f"skeleton of {{3,{a.p}}}")
        return AtlasStatus(text, OUT_OF_CATALOG, detail="star symbol outside the rank-2 table")

    if a is not INF and b is not INF:
        kind = classify(sym)
        m, k = a.p, b.p
        if kind == SPHERICAL:
            if m == 2:
                return _emb(text, "H_1", 1, 1, "hosohedron")
            if k == 2:
                if m % 2:
                    return _half_h(text, m, "polygon")
                return _emb(text, f"H_{m // 2}", 1, m // 2, "polygon")
            table = {
                (3, 3): _half_h(text, 3, "simplex", "also ½H_4"),
                (4, 3): _emb(text, "H_3", 1, 3, "bipartite-zone"),
                (3, 4): _half_h(text, 4, "cross-polytope"),
                (3, 5): _half_h(text, 6, "alternated-zone", "regular skew icosahedron"),
                (5, 3): _half_h(text, 10, "alternated-zone"),
            }
            return table[(m, k)]
        if kind == EUCLIDEAN:
            return {
                (4, 4): _emb(text, "Z_2", 1, 2, "bipartite-zone"),
                (3, 6): _emb(text, "½Z_3", 2, 3, "alternated-zone"),
                (6, 3): _emb(text, "Z_3", 1, 3, "bipartite-zone"),
            }[(m, k)]
    # infinite entries or hyperbolic
    if a is INF and b is not INF and b.p == 2:
        return _emb(text, "Z_1", 1, 1, "polygon")
    if b is INF and a is not INF and a.p == 2:
        return _emb(text, "H_1", 1, 1, "hosohedron")
    if a is not INF and a.p % 2 == 1:
        return _emb(text, "½Z_inf", 2, "inf", "alternated-zone")
    return _emb(text, "Z_inf", 1, "inf", "bipartite-zone")


def _family(sym: SchlafliSymbol) -> AtlasStatus | None:
    if not sym.is_convex or sym.has_infinity:
        return None
    e = sym.ints()
    r = len(e)
    text = format_symbol(sym)
    n = r + 1
    if all(x == 3 for x in e):
        return _half_h(text, n + 1, "simplex", f"alpha{n}")
    if e[-1] == 4 and all(x == 3 for x in e[:-1]):
        # μ_n = 2⌈n/4⌉ is attained for every n <= 80
        if n > 80:
            return AtlasStatus(text, EMBEDDABLE, reason="cross-polytope",
                               detail=f"beta{n}; minimal scale not tabulated")
        mu = 2 * math.ceil(n / 4)
        if mu == 2:
            return _half_h(text, 2 * mu, "cross-polytope", f"beta{n}")
        return _emb(text, f"H_{2 * mu}", mu, 2 * mu, "cross-polytope", f"beta{n}")
    if e[0] == 4 and all(x == 3 for x in e[1:]):
        return _emb(text, f"H_{n}", 1, n, "bipartite-zone", f"gamma{n}")
    if r >= 3 and e[0] == 4 and e[-1] == 4 and all(x == 3 for x in e[1:-1]):
        return _emb(text, f"Z_{r - 1}", 1, r - 1, "bipartite-zone", f"delta{r - 1}")
    return None


def _data_text(path: str | Path | None) -> str:
    if path is not None:
        return Path(path).read_text()
    return resources.files("cutlattice").joinpath("data/atlas.json").read_text()


@lru_cache(maxsize=8)
def _load(path: str | None) -> tuple[dict, dict]:
    raw = json.loads(_data_text(path))
    table = {}
    for row in raw["entries"]:
        key = format_symbol(as_symbol(row["symbol"]))
        table[key] = row
    return table, raw.get("notes", {})


def atlas_entries(path: str | Path | None = None) -> dict[str, dict]:
    return dict(_load(str(path) if path else None)[0])


def atlas_notes(path: str | Path | None = None) -> dict[str, str]:
    return dict(_load(str(path) if path else None)[1])


def atlas_status(sym, *, data_path: str | Path | None = None) -> AtlasStatus:
    """Status record for a regular tiling, honeycomb or polytope symbol (or an infinite family).

    Raises ``AtlasError`` for symbols with large star entries (spherical
    representations only); returns an out-of-catalog record for well-formed
    symbols that are not regular tilings.
    """
    try:
        sym = as_symbol(sym)
    except SchlafliError as exc:
        raise AtlasError(str(exc)) from None
    if sym.has_large:
        raise AtlasError(f"{format_symbol(sym)} uses a large star-polygon; not a tiling symbol")
    text = format_symbol(sym)
    if len(sym) == 1:
        e = sym[0]
        if e is INF:
            return _emb(text, "Z_1", 1, 1, "polygon", "apeirogon")
        if e.is_convex:
            return _half_h(text, e.p, "polygon") if e.p % 2 else _emb(text, f"H_{e.p // 2}", 1, e.p // 2, "polygon")
        return AtlasStatus(text, OUT_OF_CATALOG, detail="star polygon")
    if len(sym) == 2:
        return _rank2(sym)
    table, _ = _load(str(data_path) if data_path else None)
    row = table.get(text)
    if row is not None:
        extra = {k: v for k, v in row.items()
                 if k not in ("symbol", "status", "target", "scale", "dim", "reason", "detail")}
        return AtlasStatus(text, row["status"], row.get("target"), row.get("scale"), row.get("dim"),
                           row.get("reason"), row.get("detail"), source="table", extra=extra)
    if len(sym) >= 6:
        fam = _family(sym)
        if fam is not None:
            return fam
    return AtlasStatus(text, OUT_OF_CATALOG, detail="not a regular tiling or honeycomb of the catalog")
