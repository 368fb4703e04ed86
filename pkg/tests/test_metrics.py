import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cutlattice.metrics import (
    UNREACHABLE, apsp, bfs, check_metric, core_distances, diameter, distance_stability, girth,
    is_isometric_subgraph,
)
from cutlattice.skeletons import (
    SkeletonError, complete_bipartite, cycle, hypercube, path, petersen, platonic, regular_4polytope, tiling_patch,
)
from cutlattice.skeletons.core import Skeleton

from oracles import bfs_distances


@st.composite
def graphs(draw, max_n=14):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Skeleton.from_edges("random", n, edges)


@settings(max_examples=60)
@given(graphs())
def test_apsp_matches_plain_bfs(g):
    d = apsp(g)
    ref = bfs_distances(g.adj)
    for u in range(g.n):
        for v in range(g.n):
            want = UNREACHABLE if ref[u][v] == math.inf else ref[u][v]
            assert d[u, v] == want


@settings(max_examples=40)
@given(graphs())
def test_connected_distances_are_metric(g):
    if not g.is_connected():
        return
    d = apsp(g)
    check_metric(d, g)
    n = g.n
    for k in range(n):
        assert (d <= d[:, [k]] + d[[k], :]).all()
    assert n == 1 or (d[np.triu_indices(n, 1)] > 0).all()


def test_bfs_single_source():
    assert bfs(path(4), 0) == [0, 1, 2, 3, 4]


@pytest.mark.parametrize("g,want", [
    (cycle(7), 7), (petersen(), 5), (hypercube(4), 4), (complete_bipartite(2, 3), 4),
    (platonic("{5,3}"), 5), (path(4), math.inf),
])
def test_girth(g, want):
    assert girth(g) == want


def test_girth_against_networkx(cell24):
    assert girth(cell24) == nx.girth(cell24.to_networkx())


@pytest.mark.parametrize("g,want", [(petersen(), 2), (hypercube(5), 5), (platonic("{3,5}"), 3)])
def test_diameter(g, want):
    assert diameter(g) == want


def test_diameter_600cell(cell600):
    assert diameter(cell600) == 5


def test_core_girth_ignores_boundary():
    p = tiling_patch("{7,3}", 3)
    assert girth(p, restrict_to_core=True) == 7


def test_isometric_subgraph():
    g = cycle(6)
    assert is_isometric_subgraph(path(2), g, [0, 1, 2])
    # the 5-vertex path inside C6 is induced but not isometric
    assert not is_isometric_subgraph(path(4), g, [0, 1, 2, 3, 4])
    with pytest.raises(SkeletonError):
        is_isometric_subgraph(path(2), g, [0, 1, 3])


def test_core_distances_cover_core_pairs():
    p = tiling_patch("{4,4}", 2)
    cd = core_distances(p)
    k = len(p.core_vertices())
    assert len(cd) == k * (k - 1) // 2
    assert max(cd.values()) == 4


@pytest.mark.parametrize("sym", ["{4,4}", "{5,4}"])
def test_distance_stability(sym):
    assert distance_stability(sym, 3)


def test_zero_margin_is_unstable_for_hexagons():
    # geodesics between core vertices leave a radius-3 ball of {6,3}
    assert not distance_stability("{6,3}", 3, margin=0)


def test_apsp_sources_subset():
    g = regular_4polytope("24-cell")
    full = apsp(g)
    assert np.array_equal(apsp(g, [3, 5]), full[[3, 5]])
