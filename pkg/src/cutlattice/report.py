"""One-shot reproduction report: every headline check, in a fixed order."""
from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from typing import Callable

from . import riemann
from .embeddings import (
    CATALOG_NAMES, balanced_arcs_check, catalog_entry, cutcone_decompose, equivalent, partial_cube,
    remark4, short_cycles, verify, zone_embed,
)
from .embeddings.catalog import extremal_simplex, hadamard_cross
from .embeddings.core import Embedding
from .embeddings.zones import direction_families
from .hypermetrics import find_violation, apex_pair_pattern
from .metrics import apsp, distance_stability, girth
from .skeletons import (
    ResourceLimitError, antipodal_quotient, atlas_status, complete_graph, complete_minus_triangle,
    cross_polytope, is_isomorphic, petersen, platonic, pyramid, regular_4polytope,
    simplex, star_4polytope, star_honeycomb_skeleton, tiling_patch,
)
from .skeletons.tilings import face_count_at

REPORT_SCHEMA = "cutlattice-report"
REPORT_VERSION = 1

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass(frozen=True)
class Budget:
    name: str = "default"
    tuple_limit: int | None = 20_000_000_000
    n_max: int = 12
    patch_vertex_cap: int = 250_000
    node_limit: int = 2_000_000
    threads: int = 1

    def with_overrides(self, **kw) -> "Budget":
        return replace(self, **{k: v for k, v in kw.items() if v is not None})


BUDGETS = {
    "default": Budget(),
    # small enough that any scan over a 13-vertex neighbourhood for 7-gonal tuples is refused
    "tiny": Budget("tiny", tuple_limit=1_000, n_max=10, patch_vertex_cap=20_000, node_limit=100_000),
}


@dataclass
class ReportEntry:
    id: str
    locus: str
    computed: object = None
    expected: object = None
    status: str = PASS
    reason: str | None = None

    def to_dict(self) -> dict:
        d = {"id": self.id, "locus": self.locus, "computed": self.computed,
             "expected": self.expected, "status": self.status}
        if self.reason:
            d["reason"] = self.reason
        return d


@dataclass
class Report:
    budget: str
    entries: list[ReportEntry] = field(default_factory=list)

    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for e in self.entries:
            out[e.status] += 1
        return out

    def to_dict(self) -> dict:
        return {"schema": REPORT_SCHEMA, "version": REPORT_VERSION, "budget": self.budget,
                "entries": [e.to_dict() for e in self.entries], "summary": self.counts()}

    def summary_text(self) -> str:
        width = max(len(e.id) for e in self.entries) if self.entries else 0
        lines = [f"{e.status.upper():8} {e.id:{width}}  {e.locus}" + (f"  ({e.reason})" if e.reason else "")
                 for e in self.entries]
        c = self.counts()
        lines.append(f"{c[PASS]} passed, {c[FAIL]} failed, {c[SKIPPED]} skipped")
        return "\n".join(lines)


def _entry(id, locus, computed, expected) -> ReportEntry:
    return ReportEntry(id, locus, computed, expected, PASS if computed == expected else FAIL)


# -- checks ---------------------------------------------------------------------

def check_table2(b: Budget, **_):
    try:
        ents = riemann.enumerate_table2()
        riemann.doubled_entries()
    except riemann.TableError as exc:
        return ReportEntry("table2", "densities of spherical representations", str(exc), "no diff", FAIL)
    got = {"count": len(ents), "genus4": sum(e.genus == 4 for e in ents),
           "genus0": sum(e.genus == 0 for e in ents)}
    return _entry("table2", "densities of spherical representations", got,
                  {"count": 36, "genus4": 8, "genus0": 28})


STAR_RADII = {5: 1, 7: 5, 9: 4, 11: 3}


def check_star_girth(b: Budget, **_):
    got, want = {}, {}
    for m, r in STAR_RADII.items():
        want[str(m)] = 3 if m == 5 else m - 1
        g = star_honeycomb_skeleton(m, r, max_vertices=b.patch_vertex_cap)
        got[str(m)] = girth(g, restrict_to_core=True)
    return _entry("star-girth", "girth of {m/2,m} skeletons", got, want)


def check_star_polytope_certificate(b: Budget, **_):
    g = star_4polytope("{5/2,5,3}")
    degs = set(g.degrees())
    certs = find_violation(g, 5, tuple_limit=b.tuple_limit, threads=b.threads)
    c = certs[0] if certs else None
    got = {"n": g.n, "edges": g.num_edges, "degree": sorted(degs),
           "lhs": c.lhs if c else None, "rhs": c.rhs if c else None,
           "pattern": apex_pair_pattern(c) is not None if c else False}
    return _entry("star-4polytope-5gonal", "5-gonal violation in {5/2,5,3}", got,
                  {"n": 120, "edges": 1200, "degree": [20], "lhs": 7, "rhs": 6, "pattern": True})


def check_certificates(b: Budget, **_):
    out = []
    cases = [
        ("24cell-5gonal", "5-gonal violation in the 24-cell", lambda: regular_4polytope("24-cell"), 5, (7, 6)),
        ("K5-K3-5gonal", "5-gonal violation in K5-K3", complete_minus_triangle, 5, (7, 6)),
        ("pyramid-ico-7gonal", "7-gonal violation in pyramid(icosahedron)",
         lambda: pyramid(platonic("{3,5}")), 7, None),
        ("600cell-7gonal", "7-gonal violation in the 600-cell", lambda: regular_4polytope("600-cell"), 7, None),
    ]
    for id, locus, build, k, sides in cases:
        g = build()
        try:
            certs = find_violation(g, k, tuple_limit=b.tuple_limit, threads=b.threads)
        except ResourceLimitError as exc:
            out.append(ReportEntry(id, locus, None, "certificate", SKIPPED, str(exc)))
            continue
        d = apsp(g)
        if not certs:
            out.append(ReportEntry(id, locus, "none", "certificate", FAIL))
            continue
        c = certs[0]
        ok = c.recheck(d) and (sides is None or (c.lhs, c.rhs) == sides)
        out.append(ReportEntry(id, locus, {"vertices": list(c.vertices), "lhs": c.lhs, "rhs": c.rhs},
                               "certificate" + (f" {sides[0]} > {sides[1]}" if sides else ""),
                               PASS if ok else FAIL))
    return out


def check_embedding_suite(b: Budget, **_):
    got, want = {}, {}

    def add(key, value, expected):
        got[key], want[key] = value, expected

    for name, sd in [("gamma3", (1, 3)), ("alpha3", (2, 3)), ("alpha3:h4", (2, 4)), ("beta3", (2, 4)),
                     ("icosahedron", (2, 6)), ("dodecahedron", (2, 10))]:
        _, e = catalog_entry(name)
        add(name, [e.scale, e.dim], list(sd))
    add("alpha3-inequivalent", not equivalent(catalog_entry("alpha3")[1], catalog_entry("alpha3:h4")[1]), True)
    for sym, R, scale, fams in [("{4,4}", 3, 1, 2), ("{6,3}", 4, 1, 3), ("{3,6}", 4, 2, 3),
                                ("{7,3}", 3, 2, None), ("{5,4}", 2, 2, None)]:
        p = tiling_patch(sym, R, max_vertices=b.patch_vertex_cap)
        r = zone_embed(p)
        val = [r.embedding.scale if r else None]
        exp = [scale]
        if fams is not None:
            val.append(direction_families(p, r.zone_edges()) if r else None)
            exp.append(fams)
        add(sym, val, exp)
    return _entry("tiling-embeddings", "embeddings of solids and planar tilings", got, want)


def check_quotients(b: Budget, **_):
    got = {
        "cube/antipodal=K4": is_isomorphic(antipodal_quotient(platonic("{4,3}")), complete_graph(4)),
        "icosahedron/antipodal=K6": is_isomorphic(antipodal_quotient(platonic("{3,5}")), complete_graph(6)),
        "dodecahedron/antipodal=petersen": is_isomorphic(antipodal_quotient(platonic("{5,3}")), petersen()),
    }
    for name in ("petersen", "K6", "K4", "C3xC3", "C4xC4"):
        e = catalog_entry(name)[1]
        got[name] = [e.scale, e.dim]
    want = {k: True for k in list(got)[:3]}
    want.update({"petersen": [2, 6], "K6": [2, 6], "K4": [2, 4], "C3xC3": [2, 6], "C4xC4": [1, 4]})
    return _entry("antipodal-quotients", "antipodal quotients and their embeddings", got, want)


def check_simplex_scales(b: Budget, **_):
    p = remark4(4)
    a4 = extremal_simplex(4)
    b5 = hadamard_cross(5)
    beta5 = cross_polytope(5)
    got = {"m_4": str(p.m_n), "lambda_4": p.lambda_n,
           "alpha4": [a4.scale, a4.dim, bool(verify(simplex(4), a4))],
           "beta5": [b5.scale, b5.dim, bool(verify(beta5, b5))]}
    want = {"m_4": "5/3", "lambda_4": 6, "alpha4": [6, 10, True], "beta5": [4, 8, True]}
    if beta5.n > b.n_max:
        return [_entry("simplex-scales", "scale arithmetic for simplices", got, want),
                ReportEntry("beta5-scale2", "no scale-2 cut decomposition of beta5", None, "none",
                            SKIPPED, f"n={beta5.n} exceeds n_max={b.n_max}")]
    try:
        res = cutcone_decompose(beta5, 2, n_max=b.n_max, node_limit=b.node_limit)
        exhaustive = "none" if res.none_exists else "found"
        ent = _entry("beta5-scale2", "no scale-2 cut decomposition of beta5",
                     {"result": exhaustive, "cuts": res.num_cuts}, {"result": "none", "cuts": 511})
    except ResourceLimitError as exc:
        ent = ReportEntry("beta5-scale2", "no scale-2 cut decomposition of beta5", None, "none", SKIPPED, str(exc))
    return [_entry("simplex-scales", "scale arithmetic for simplices", got, want), ent]


def check_soundness(b: Budget, *, seed: int = 0, trials: int = 200, **_):
    rng = random.Random(seed)
    hyper_clean, agree, balanced = True, True, True
    detail = []
    corrupted_caught = 0
    pool = []
    for name in CATALOG_NAMES:
        g, e = catalog_entry(name)
        d = apsp(g)
        for k in (5, 7):
            if g.n >= k and find_violation(g, k, d=d, tuple_limit=b.tuple_limit):
                hyper_clean = False
                detail.append(f"{name}: {k}-gonal violation")
        if g.n <= min(b.n_max, 12):
            pc = bool(partial_cube(g, d))
            cc = bool(cutcone_decompose(g, 1, n_max=b.n_max, node_limit=b.node_limit, d=d))
            if pc != cc:
                agree = False
                detail.append(f"{name}: partial cube {pc}, cut cone {cc}")
        cycles = short_cycles(g, limit=20)
        if not all(balanced_arcs_check(g, e, c) for c in cycles):
            balanced = False
            detail.append(f"{name}: unbalanced arc")
        pool.extend((g, e, c) for c in cycles)
    for _ in range(trials):
        g, e, c = rng.choice(pool)
        lab = e.labels.copy()
        lab[rng.choice(c), rng.randrange(e.dim)] ^= 1
        if not balanced_arcs_check(g, Embedding(e.scale, lab), c):
            corrupted_caught += 1
    got = {"hypermetric-clean": hyper_clean, "partial-cube=cutcone": agree, "balanced": balanced,
           "corruptions-caught": corrupted_caught}
    want = {"hypermetric-clean": True, "partial-cube=cutcone": True, "balanced": True,
            "corruptions-caught": trials}
    ent = _entry("soundness", "cross-module consistency", got, want)
    if detail:
        ent.reason = "; ".join(detail[:5])
    return ent


STABILITY = [("{4,4}", 4), ("{6,3}", 4), ("{3,6}", 4), ("{7,3}", 4), ("{3,7}", 4), ("{5,4}", 4)]


def interior_regular(p) -> bool:
    from .schlafli import as_symbol

    pp, q = as_symbol(p.symbol).ints()
    cnt = face_count_at(p)
    return all(len(f) == pp for f in p.faces) and all(
        p.degree(v) == q and cnt[v] == q for v in p.core_vertices())


def check_patches(b: Budget, **_):
    got, want = {}, {}
    for sym, R in STABILITY:
        try:
            p = tiling_patch(sym, R, max_vertices=b.patch_vertex_cap)
            stable = distance_stability(sym, R, max_vertices=b.patch_vertex_cap)
        except ResourceLimitError as exc:
            got[sym] = f"skipped: {exc}"
            want[sym] = [True, True]
            continue
        got[sym] = [stable, interior_regular(p)]
        want[sym] = [True, True]
    ent = _entry("patch-integrity", "distance stability and interior regularity", got, want)
    if any(isinstance(v, str) for v in got.values()):
        ent.status, ent.reason = SKIPPED, "patch vertex cap"
    return ent


ATLAS_EXPECTED = {
    "{4,3,5}": "embeddable", "{5,3,5}": "non-embeddable", "{6,3,4}": "embeddable",
    "{3,5}": "embeddable", "{7/2,7}": "non-embeddable", "{5/2,5,3}": "non-embeddable",
    "{3,3,5}": "non-embeddable", "{4,3,4}": "embeddable",
}


def check_atlas(b: Budget, *, atlas_path=None, **_):
    got = {}
    for sym in ATLAS_EXPECTED:
        try:
            got[sym] = atlas_status(sym, data_path=atlas_path).status
        except Exception as exc:  # corrupted data files surface as a diff
            got[sym] = f"error: {exc}"
    ent = _entry("atlas", "embeddability atlas", got, dict(ATLAS_EXPECTED))
    if ent.status == FAIL:
        ent.reason = "diff: " + ", ".join(f"{k}: {got[k]} != {v}" for k, v in ATLAS_EXPECTED.items()
                                          if got[k] != v)
    return ent


LOCI = {
    "check_table2": ("table2", "densities of spherical representations"),
    "check_star_girth": ("star-girth", "girth of {m/2,m} skeletons"),
    "check_star_polytope_certificate": ("star-4polytope-5gonal", "5-gonal violation in {5/2,5,3}"),
    "check_certificates": ("certificates", "5- and 7-gonal violations"),
    "check_embedding_suite": ("tiling-embeddings", "embeddings of solids and planar tilings"),
    "check_quotients": ("antipodal-quotients", "antipodal quotients and their embeddings"),
    "check_simplex_scales": ("simplex-scales", "scale arithmetic for simplices"),
    "check_soundness": ("soundness", "cross-module consistency"),
    "check_patches": ("patch-integrity", "distance stability and interior regularity"),
    "check_atlas": ("atlas", "embeddability atlas"),
}

CHECKS: list[Callable] = [
    check_table2, check_star_girth, check_star_polytope_certificate, check_certificates,
    check_embedding_suite, check_quotients, check_simplex_scales, check_soundness, check_patches,
    check_atlas,
]


def run_report(budget: Budget | str = "default", *, atlas_path=None, only=None) -> Report:
    if isinstance(budget, str):
        budget = BUDGETS[budget]
    rep = Report(budget.name)
    for check in CHECKS:
        if only is not None and check.__name__ not in only:
            continue
        try:
            res = check(budget, atlas_path=atlas_path)
        except ResourceLimitError as exc:
            id, locus = LOCI[check.__name__]
            res = ReportEntry(id, locus, None, None, SKIPPED, str(exc))
        rep.entries.extend(res if isinstance(res, list) else [res])
    return rep
