from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cutlattice.embeddings import (
    CATALOG_NAMES, CatalogError, CutconeError, CutDecomposition, Embedding, EmbeddingError, admissible_lengths,
    balanced_arcs_check, canonical_cuts, catalog_entry, concatenate, cutcone_decompose, cycle_embedding,
    direction_families, equivalent, extremal_simplex, hadamard_code, label_search, minimal_scale, partial_cube,
    remark4, rescaled, short_cycles, subset_cuts, two_embeddings_of_simplex, verify,
    weight_one, zone_embed,
)
from cutlattice.metrics import apsp
from cutlattice.skeletons import (
    SkeletonError, complete_bipartite, complete_graph, complete_minus_triangle, cross_polytope, cycle, hypercube,
    petersen, platonic, simplex, tiling_patch,
)
from cutlattice.skeletons.core import Skeleton

from oracles import backtrack_labels, milp_cut_decomposition


# -- verify and the Embedding type ---------------------------------------------

def test_verify_reports_first_bad_pair():
    g = cycle(4)
    e = cycle_embedding(4)
    assert verify(g, e)
    lab = np.array(e.labels)
    lab[2, 0] ^= 1
    res = verify(g, Embedding(1, lab))
    assert not res
    u, v, want, got = res.witness
    assert 2 in (u, v) and want != got


def test_verify_rejects_wrong_size():
    with pytest.raises(EmbeddingError):
        verify(cycle(5), cycle_embedding(4))


def test_embedding_validation_and_json():
    with pytest.raises(EmbeddingError):
        Embedding(1, np.array([[0, 2]]))
    with pytest.raises(EmbeddingError):
        Embedding(0, np.zeros((2, 2)))
    e = weight_one(4)
    assert Embedding.from_json(e.to_json()).labels.tolist() == e.labels.tolist()
    assert e.target() == "½H_4"
    assert cycle_embedding(6).target() == "H_3"


def test_equivalence_up_to_symmetries():
    e = cycle_embedding(6)
    lab = e.labels[:, ::-1] ^ np.array([1, 0, 1], dtype=np.uint8)
    assert equivalent(e, Embedding(1, lab))
    assert not equivalent(e, rescaled(e, 2))


def test_concatenate_and_rescale():
    a, b = cycle_embedding(5), weight_one(5)
    c = concatenate(a, b)
    assert c.dim == 10 and c.scale == 2
    assert verify(cycle(5), rescaled(cycle_embedding(5), 3))
    with pytest.raises(EmbeddingError):
        concatenate(cycle_embedding(4), weight_one(4))


def test_cut_decomposition_round_trip():
    e = cycle_embedding(5)
    dec = CutDecomposition.from_embedding(e)
    assert dec.dim == 5
    assert verify(cycle(5), dec.to_embedding())
    assert CutDecomposition.from_dict(dec.to_dict()) == dec


# -- partial cubes --------------------------------------------------------------

@pytest.mark.parametrize("g,dim", [(cycle(6), 3), (hypercube(4), 4), (cycle(8), 4)])
def test_partial_cubes(g, dim):
    res = partial_cube(g)
    assert res and res.embedding.dim == dim
    assert verify(g, res.embedding)


def test_non_partial_cubes():
    assert partial_cube(cycle(5)).reason == "not bipartite"
    res = partial_cube(complete_bipartite(2, 3))
    assert not res and "Θ is not transitive" in res.reason
    assert backtrack_labels(apsp(complete_bipartite(2, 3)), 1, 6) is None


@pytest.mark.parametrize("sym,families", [("{6,3}", 3), ("{4,4}", 2)])
def test_partial_cube_on_patches(sym, families):
    p = tiling_patch(sym, 3)
    core = p.induced(p.core_vertices())
    res = partial_cube(core)
    assert res
    z = zone_embed(p)
    assert direction_families(p, z.zone_edges()) == families


# -- zones ----------------------------------------------------------------------

@pytest.mark.parametrize("sym,scale,dim", [
    ("{3,3}", 2, 3), ("{3,4}", 2, 4), ("{4,3}", 1, 3), ("{3,5}", 2, 6), ("{5,3}", 2, 10),
])
def test_zone_embed_solids(sym, scale, dim):
    g = platonic(sym)
    res = zone_embed(g)
    assert res, res.reason
    assert (res.embedding.scale, res.embedding.dim) == (scale, dim)
    assert verify(g, res.embedding)


@pytest.mark.parametrize("sym,scale", [
    ("{4,4}", 1), ("{6,3}", 1), ("{4,5}", 1), ("{8,3}", 1), ("{3,6}", 2), ("{7,3}", 2), ("{5,4}", 2), ("{3,7}", 2),
])
def test_zone_embed_tilings(sym, scale):
    p = tiling_patch(sym, 2)
    res = zone_embed(p)
    assert res, res.reason
    assert res.embedding.scale == scale
    assert verify(p, res.embedding, restrict_to_core=True)


def test_zone_embed_needs_faces():
    assert not zone_embed(petersen())


# -- cut cone -------------------------------------------------------------------

def test_canonical_cuts_contain_vertex_zero():
    cuts = canonical_cuts(5)
    assert len(cuts) == 15 and all(c & 1 for c in cuts)


def test_five_cycle_scale_two():
    res = cutcone_decompose(cycle(5), 2)
    assert res and res.decomposition.dim == 5
    assert not cutcone_decompose(cycle(5), 1)


def test_cutcone_agrees_with_milp_on_named_graphs():
    for g in (complete_bipartite(2, 3), complete_minus_triangle(), petersen(), cycle(7)):
        d = apsp(g)
        for scale in (1, 2):
            ours = cutcone_decompose(g, scale)
            assert bool(ours) == (milp_cut_decomposition(d, scale) is not None), (g.name, scale)


@st.composite
def small_graphs(draw):
    n = draw(st.integers(3, 6))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges |= set(draw(st.lists(st.sampled_from(pairs), unique=True, max_size=8)))
    return Skeleton.from_edges("random", n, sorted(edges))


@settings(max_examples=40, deadline=None)
@given(small_graphs(), st.sampled_from([1, 2]))
def test_cutcone_agrees_with_milp(g, scale):
    ours = cutcone_decompose(g, scale)
    assert bool(ours) == (milp_cut_decomposition(apsp(g), scale) is not None)
    if ours:
        assert verify(g, ours.embedding())


def test_cutcone_limits():
    with pytest.raises(CutconeError):
        cutcone_decompose(cycle(20), 2)
    with pytest.raises(CutconeError):
        cutcone_decompose(cycle(4), 0)


def test_minimal_scales(icosahedron):
    assert minimal_scale(cross_polytope(5)).scale == 4
    assert minimal_scale(petersen()).scale == 2
    assert minimal_scale(icosahedron).scale == 2


# -- catalog --------------------------------------------------------------------

@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_catalog_entries_verify(name):
    g, e = catalog_entry(name)
    assert verify(g, e)


def test_catalog_unknown_name():
    with pytest.raises(CatalogError):
        catalog_entry("no-such-graph")


def test_label_search_matches_backtracking_oracle():
    g = petersen()
    e = label_search(g, 2, 6)
    assert e is not None and verify(g, e)
    assert label_search(g, 2, 5) is None
    assert backtrack_labels(apsp(g), 2, 5) is None


def test_cycle_and_product_embeddings():
    for m in range(3, 10):
        e = cycle_embedding(m)
        assert verify(cycle(m), e)
        assert (e.scale, e.dim) == ((1, m // 2) if m % 2 == 0 else (2, m))
    g, e = catalog_entry("C3xC4")
    assert (e.scale, e.dim) == (2, 7)


def test_hadamard_code_distances():
    h = hadamard_code(3)
    assert h.shape == (8, 7)
    dist = (h[:, None, :] != h[None, :, :]).sum(axis=2)
    assert set(dist[np.triu_indices(8, 1)]) == {4}


@pytest.mark.parametrize("n,m_n,lam", [(3, "3/2", 2), (4, "5/3", 6), (5, "5/3", 6), (7, "7/4", 4)])
def test_simplex_scale_params(n, m_n, lam):
    p = remark4(n)
    assert (str(p.m_n), p.lambda_n) == (m_n, lam)


@pytest.mark.parametrize("n", range(3, 10))
def test_extremal_simplex_ratio(n):
    e = extremal_simplex(n)
    assert verify(simplex(n), e)
    assert Fraction(e.dim, e.scale) == remark4(n).m_n


def test_two_simplex_embeddings_differ():
    a, b = two_embeddings_of_simplex(4)
    assert (a.scale, a.dim) == (2, 5) and (b.scale, b.dim) == (6, 10)
    assert not equivalent(a, b)


def test_subset_cuts_scale():
    e = subset_cuts(6, 3)
    assert verify(complete_graph(6), e)
    assert (e.scale, e.dim) == (6, 10)


# -- balanced arcs --------------------------------------------------------------

def test_admissible_lengths():
    assert admissible_lengths(hypercube(3)) == {4, 5}
    assert admissible_lengths(petersen()) == {5}


def test_balanced_arcs_on_solids():
    g, e = catalog_entry("dodecahedron")
    cycles = short_cycles(g)
    assert len(cycles) == 12
    assert all(balanced_arcs_check(g, e, c) for c in cycles)


def test_balanced_arcs_rejects_corruption():
    g, e = catalog_entry("cube")
    c = short_cycles(g)[0]
    lab = np.array(e.labels)
    lab[c[1], 0] ^= 1
    assert not balanced_arcs_check(g, Embedding(1, lab), c)


def test_balanced_arcs_bad_cycle():
    g, e = catalog_entry("cube")
    with pytest.raises(SkeletonError):
        balanced_arcs_check(g, e, (0, 1, 2))
    with pytest.raises(SkeletonError):
        balanced_arcs_check(g, e, tuple(range(8)))
