import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cutlattice.hypermetrics import (
    FIVE_GONAL, SEVEN_GONAL, BudgetExceeded, ViolationCertificate, apex_pair_pattern, find_violation, kgonal_check,
)
from cutlattice.metrics import apsp
from cutlattice.skeletons import (
    SkeletonError, complete_bipartite, complete_minus_triangle, cycle, petersen, platonic, pyramid, tiling_patch,
)
from cutlattice.skeletons.core import Skeleton

from oracles import all_kgonal_violations


def _pairs(certs):
    return {(tuple(sorted(c.positives)), tuple(sorted(c.negatives))) for c in certs}


def test_k5_minus_k3_all_mode_matches_brute_force():
    g = complete_minus_triangle()
    d = apsp(g)
    certs = find_violation(g, 5, "all")
    assert _pairs(certs) == set(all_kgonal_violations(d, 5))
    assert all((c.lhs, c.rhs) == (7, 6) for c in certs)


def test_k5_minus_k3_certificate_uses_every_vertex():
    g = complete_minus_triangle()
    (c,) = find_violation(g, 5)
    assert sorted(c.vertices) == list(range(5))
    # positives are the two degree-4 vertices, negatives the independent triple
    assert sorted(g.degree(v) for v in c.positives) == [4, 4]
    assert apex_pair_pattern(c) is None


@pytest.mark.parametrize("g", [cycle(5), cycle(6), petersen(), platonic("{3,5}"), platonic("{5,3}")])
def test_embeddable_graphs_are_clean(g):
    assert find_violation(g, 5) == []
    assert find_violation(g, 7) == []


def test_five_cycle_all_tuples_hold():
    d = apsp(cycle(5))
    assert kgonal_check(d, range(5), FIVE_GONAL) is None
    assert all_kgonal_violations(d, 5) == []


def test_pyramid_on_icosahedron_is_five_gonal_not_seven_gonal(icosahedron):
    g = pyramid(icosahedron)
    assert find_violation(g, 5) == []
    (c,) = find_violation(g, 7)
    assert c.lhs > c.rhs
    # the apex shortens antipodal distances, so the tuple may avoid it
    assert c.recheck(apsp(g))
    assert not find_violation(icosahedron, 7, "restricted", subset=c.vertices)


@st.composite
def connected_graphs(draw, max_n=8):
    n = draw(st.integers(5, max_n))
    # a random spanning tree plus random chords keeps the graph connected
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges |= set(draw(st.lists(st.sampled_from(pairs), unique=True, max_size=12)))
    return Skeleton.from_edges("random", n, sorted(edges))


@settings(max_examples=60, deadline=None)
@given(connected_graphs())
def test_all_mode_matches_brute_force(g):
    d = apsp(g)
    for k in (5, 7):
        if g.n < k:
            continue
        want = set(all_kgonal_violations(d, k))
        assert _pairs(find_violation(g, k, "all")) == want
        first = find_violation(g, k)
        assert bool(first) == bool(want)
        if first:
            assert _pairs(first) <= want
            assert first[0].recheck(d)


def test_unstaged_first_is_lexicographically_least():
    g = complete_minus_triangle()
    d = apsp(g)
    (c,) = find_violation(g, 5, staged=False)
    least = min(tuple(sorted(p)) + tuple(sorted(n)) for p, n in all_kgonal_violations(d, 5))
    assert tuple(sorted(c.positives)) + tuple(sorted(c.negatives)) == least


def test_certificate_json_round_trip():
    (c,) = find_violation(complete_minus_triangle(), 5)
    back = ViolationCertificate.from_dict(json.loads(json.dumps(c.to_dict())))
    assert back == c
    assert back.recheck()


def test_tampered_certificate_fails_recheck():
    g = complete_minus_triangle()
    (c,) = find_violation(g, 5)
    dist = [list(r) for r in c.distances]
    dist[0][1] = dist[1][0] = dist[0][1] + 1
    bad = ViolationCertificate(c.vertices, c.b, c.lhs, c.rhs, tuple(tuple(r) for r in dist))
    assert not bad.recheck()
    assert not bad.recheck(apsp(g))


def test_restricted_mode():
    g = complete_minus_triangle()
    assert find_violation(g, 5, "restricted", subset=range(5))
    with pytest.raises(SkeletonError):
        find_violation(g, 5, "restricted")


def test_b_vector_validation():
    d = apsp(cycle(5))
    with pytest.raises(SkeletonError):
        kgonal_check(d, range(5), (1, 1, 1, 1, -1))
    with pytest.raises(SkeletonError):
        kgonal_check(d, range(4), FIVE_GONAL)
    with pytest.raises(SkeletonError):
        kgonal_check(d, (0, 0, 1, 2, 3), FIVE_GONAL)
    # a negated b-vector sums to -1 and is accepted
    assert kgonal_check(d, range(5), tuple(-x for x in FIVE_GONAL)) is None


def test_bad_k():
    with pytest.raises(SkeletonError):
        find_violation(cycle(5), 6)


def test_tuple_budget():
    with pytest.raises(BudgetExceeded):
        find_violation(petersen(), 7, "all", tuple_limit=10)


def test_patch_tuples_stay_in_core():
    p = tiling_patch("{3,7}", 1)
    core = set(p.core_vertices())
    for c in find_violation(p, 5, "all"):
        assert set(c.vertices) <= core


def test_complete_bipartite_k23_is_not_five_gonal():
    g = complete_bipartite(2, 3)
    certs = find_violation(g, 5, "all")
    assert _pairs(certs) == {((0, 1), (2, 3, 4))}
    assert (certs[0].lhs, certs[0].rhs) == (8, 6)


def test_seven_gonal_vector():
    assert abs(sum(SEVEN_GONAL)) == 1 and len(SEVEN_GONAL) == 7
    d = np.ones((7, 7), dtype=int) - np.eye(7, dtype=int)
    assert kgonal_check(d, range(7), SEVEN_GONAL) is None
