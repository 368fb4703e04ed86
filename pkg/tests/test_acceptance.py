"""Acceptance suite: one group of tests per criterion, summarised per criterion at the end of the run.

Expected values are frozen literals.  The density grid is transcribed from the
published table; everything else is a small integer fact about a named graph.
"""
import time

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from cutlattice.embeddings import (
    CATALOG_NAMES, Embedding, balanced_arcs_check, catalog_entry, cutcone_decompose, direction_families,
    equivalent, extremal_simplex, hadamard_cross, partial_cube, remark4, short_cycles, verify, zone_embed,
)
from cutlattice.hypermetrics import apex_pair_pattern, find_violation
from cutlattice.metrics import apsp, distance_stability, girth
from cutlattice.riemann import enumerate_table2
from cutlattice.skeletons import (
    antipodal_quotient, complete_graph, complete_minus_triangle, cross_polytope, is_isomorphic, petersen,
    platonic, pyramid, simplex, star_honeycomb_skeleton, tiling_patch,
)
from cutlattice.skeletons.tilings import face_count_at

# rows are cells, columns vertex figures; None where no representation exists
POLYS = ["3/1", "3/2", "4/1", "4/3", "5/1", "5/4", "5/2", "5/3"]
DENSITY_GRID = [
    [1, 3, 1, 7, 1, 19, 7, 13],
    [3, 5, 5, 11, 11, 29, 17, 23],
    [1, 5, None, None, None, None, None, None],
    [7, 11, None, None, None, None, None, None],
    [1, 11, None, None, None, None, 3, 9],
    [19, 29, None, None, None, None, 21, 27],
    [7, 17, None, None, 3, 21, None, None],
    [13, 23, None, None, 9, 27, None, None],
]


class Timer:
    def __init__(self, cap):
        self.cap = cap

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        if exc[0] is None:
            assert self.elapsed < self.cap, f"took {self.elapsed:.1f} s, cap {self.cap} s"


# -- 1 -----------------------------------------------------------------------------

def test_criterion_1_density_grid():
    with Timer(1.0):
        ents = enumerate_table2()
    got = {(f"{e.cell[0]}/{e.cell[1]}", f"{e.vertex_figure[0]}/{e.vertex_figure[1]}"): e.density for e in ents}
    want = {(r, c): DENSITY_GRID[i][j] for i, r in enumerate(POLYS) for j, c in enumerate(POLYS)
            if DENSITY_GRID[i][j] is not None}
    assert len(ents) == 36
    assert got == want


def test_criterion_1_genus_split():
    ents = enumerate_table2()
    assert sum(e.genus == 4 for e in ents) == 8
    assert sum(e.genus == 0 for e in ents) == 28
    assert all(e.genus == 4 for e in ents if e.cell[0] == 5 and e.vertex_figure[0] == 5)


# -- 2 -----------------------------------------------------------------------------

@pytest.mark.parametrize("m,radius,expected", [(5, 1, 3), (7, 5, 6), (9, 4, 8), (11, 3, 10)])
def test_criterion_2_star_honeycomb_girth(m, radius, expected):
    with Timer(120):
        g = star_honeycomb_skeleton(m, radius)
        assert g.n <= 60_000
        assert girth(g, restrict_to_core=True) == expected


# -- 3 -----------------------------------------------------------------------------

def test_criterion_3_star_polytope_certificate(star_5_2_5_3):
    g = star_5_2_5_3
    assert (g.n, g.num_edges) == (120, 1200)
    assert set(g.degrees()) == {20}
    with Timer(60):
        certs = find_violation(g, 5)
    assert certs
    c = certs[0]
    assert (c.lhs, c.rhs) == (7, 6)
    assert c.recheck(apsp(g))
    pat = apex_pair_pattern(c)
    assert pat is not None
    d = apsp(g)
    a, b, x, y, z = (pat[k] for k in "abxyz")
    assert d[a, b] == 2 and d[x, y] == 1
    assert all(d[p, q] == 1 for p in (a, b) for q in (x, y, z))


# -- 4 -----------------------------------------------------------------------------

@pytest.mark.parametrize("name", ["24-cell", "K5-K3"])
def test_criterion_4_five_gonal(name, cell24):
    g = cell24 if name == "24-cell" else complete_minus_triangle()
    certs = find_violation(g, 5)
    assert certs
    assert (certs[0].lhs, certs[0].rhs) == (7, 6)
    assert certs[0].recheck(apsp(g))


@pytest.mark.parametrize("name", ["pyramid-icosahedron", "600-cell"])
def test_criterion_4_seven_gonal(name, icosahedron, cell600):
    g = pyramid(icosahedron) if name == "pyramid-icosahedron" else cell600
    with Timer(600):
        certs = find_violation(g, 7)
    assert certs
    c = certs[0]
    assert c.lhs > c.rhs
    assert c.recheck(apsp(g))


# -- 5 -----------------------------------------------------------------------------

@pytest.mark.parametrize("name,scale,dim", [
    ("gamma3", 1, 3), ("alpha3", 2, 3), ("alpha3:h4", 2, 4), ("beta3", 2, 4),
    ("icosahedron", 2, 6), ("dodecahedron", 2, 10),
])
def test_criterion_5_solid_embeddings(name, scale, dim):
    g, e = catalog_entry(name)
    assert (e.scale, e.dim) == (scale, dim)
    assert verify(g, e).valid


def test_criterion_5_simplex_embeddings_inequivalent():
    a, b = catalog_entry("alpha3")[1], catalog_entry("alpha3:h4")[1]
    assert not equivalent(a, b)


@pytest.mark.parametrize("sym,radius,scale,families", [
    ("{4,4}", 3, 1, 2), ("{6,3}", 4, 1, 3), ("{3,6}", 4, 2, 3), ("{7,3}", 3, 2, None), ("{5,4}", 2, 2, None),
])
def test_criterion_5_tiling_zones(sym, radius, scale, families):
    p = tiling_patch(sym, radius)
    res = zone_embed(p)
    assert res, res.reason
    assert res.embedding.scale == scale
    assert verify(p, res.embedding, restrict_to_core=True).valid
    if families is not None:
        assert direction_families(p, res.zone_edges()) == families


# -- 6 -----------------------------------------------------------------------------

@pytest.mark.parametrize("solid,quotient", [("{4,3}", "K4"), ("{3,5}", "K6"), ("{5,3}", "petersen")])
def test_criterion_6_antipodal_quotients(solid, quotient):
    q = antipodal_quotient(platonic(solid))
    ref = petersen() if quotient == "petersen" else complete_graph(int(quotient[1:]))
    assert is_isomorphic(q, ref)


@pytest.mark.parametrize("name,scale,dim", [
    ("petersen", 2, 6), ("K6", 2, 6), ("K4", 2, 4), ("C3xC3", 2, 6), ("C4xC4", 1, 4),
])
def test_criterion_6_quotient_embeddings(name, scale, dim):
    g, e = catalog_entry(name)
    assert (e.scale, e.dim) == (scale, dim)
    assert verify(g, e).valid


# -- 7 -----------------------------------------------------------------------------

def test_criterion_7_simplex_scale_arithmetic():
    p = remark4(4)
    assert str(p.m_n) == "5/3" and p.lambda_n == 6
    e = extremal_simplex(4)
    assert (e.scale, e.dim) == (6, 10)
    assert verify(simplex(4), e).valid


def test_criterion_7_cross_polytope_scale4():
    e = hadamard_cross(5)
    assert (e.scale, e.dim) == (4, 8)
    assert verify(cross_polytope(5), e).valid


def test_criterion_7_cross_polytope_no_scale2():
    with Timer(300):
        res = cutcone_decompose(cross_polytope(5), 2)
    assert res.num_cuts == 511
    assert res.none_exists


# -- 8 -----------------------------------------------------------------------------

CATALOG = {name: catalog_entry(name) for name in CATALOG_NAMES}
CYCLES = {name: short_cycles(g, limit=20) for name, (g, _) in CATALOG.items()}
POOL = [(name, i) for name in CATALOG_NAMES for i in range(len(CYCLES[name]))]


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_criterion_8_embedded_graphs_are_hypermetric(name):
    g, _ = CATALOG[name]
    d = apsp(g)
    for k in (5, 7):
        if g.n >= k:
            assert find_violation(g, k, d=d) == []


@pytest.mark.parametrize("name", [n for n in CATALOG_NAMES if CATALOG[n][0].n <= 12])
def test_criterion_8_partial_cube_matches_cutcone(name):
    g, _ = CATALOG[name]
    assert bool(partial_cube(g)) == bool(cutcone_decompose(g, 1))


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_criterion_8_girth_cycles_balanced(name):
    g, e = CATALOG[name]
    assert CYCLES[name]
    assert all(balanced_arcs_check(g, e, c) for c in CYCLES[name])


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.sampled_from(POOL), st.integers(0, 10**6), st.integers(0, 10**6))
def test_criterion_8_corrupted_labels_unbalanced(item, vpick, cpick):
    name, i = item
    g, e = CATALOG[name]
    cyc = CYCLES[name][i]
    lab = np.array(e.labels)
    lab[cyc[vpick % len(cyc)], cpick % e.dim] ^= 1
    assert not balanced_arcs_check(g, Embedding(e.scale, lab), cyc)


# -- 9 -----------------------------------------------------------------------------

TILINGS = ["{4,4}", "{6,3}", "{3,6}", "{7,3}", "{3,7}", "{5,4}"]


@pytest.mark.parametrize("sym", TILINGS)
@pytest.mark.parametrize("radius", [1, 2, 3, 4])
def test_criterion_9_distance_stability(sym, radius):
    assert distance_stability(sym, radius)


@pytest.mark.parametrize("sym", TILINGS)
@pytest.mark.parametrize("radius", [1, 2, 3, 4])
def test_criterion_9_interior_regularity(sym, radius):
    p = tiling_patch(sym, radius)
    pp, q = (int(x) for x in sym.strip("{}").split(","))
    counts = face_count_at(p)
    assert all(len(f) == pp for f in p.faces)
    for v in p.core_vertices():
        assert p.degree(v) == q
        assert counts[v] == q
