"""Exact graph metrics: all-pairs distances, girth, diameter, isometric subgraphs."""
from __future__ import annotations

from collections import deque
from typing import Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .skeletons.core import Skeleton, SkeletonError
from .skeletons.tilings import DEFAULT_MAX_VERTICES, tiling_patch

UNREACHABLE = np.iinfo(np.uint16).max
INFINITE_GIRTH = float("inf")


def _csr(g: Skeleton) -> csr_matrix:
    rows = np.repeat(np.arange(g.n), [len(nb) for nb in g.adj])
    cols = np.fromiter((u for nb in g.adj for u in nb), dtype=np.int64, count=len(rows))
    return csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(g.n, g.n))


def apsp(g: Skeleton, sources: Sequence[int] | None = None) -> np.ndarray:
    """Hop distances as uint16; unreachable pairs hold ``UNREACHABLE``.

    With ``sources`` only those rows are computed (shape ``len(sources) x n``).
    """
    if g.n == 0:
        raise SkeletonError("empty graph")
    d = shortest_path(_csr(g), method="D", unweighted=True, directed=False,
                      indices=None if sources is None else np.asarray(sources))
    d = np.atleast_2d(d)
    inf = ~np.isfinite(d)
    d[inf] = 0
    if d.max(initial=0) >= UNREACHABLE:
        raise SkeletonError("distance overflows the 16-bit matrix")
    out = d.astype(np.uint16)
    out[inf] = UNREACHABLE
    return out


def bfs(g: Skeleton, s: int) -> list[int]:
    dist = [-1] * g.n
    dist[s] = 0
    todo = deque([s])
    while todo:
        v = todo.popleft()
        for u in g.adj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                todo.append(u)
    return dist


def _shortest_cycle_through(g: Skeleton, s: int, bound: float) -> float:
    """Length of a shortest cycle through ``s`` (or anything < bound found on the way)."""
    dist = {s: 0}
    branch = {s: s}
    parent = {s: -1}
    todo = deque([s])
    best = bound
    while todo:
        v = todo.popleft()
        if 2 * dist[v] + 1 >= best:
            break
        for u in g.adj[v]:
            if u == parent[v]:
                continue
            if u not in dist:
                dist[u] = dist[v] + 1
                parent[u] = v
                branch[u] = u if v == s else branch[v]
                todo.append(u)
            elif branch[u] != branch[v] or u == s:
                best = min(best, dist[u] + dist[v] + 1)
    return best


def girth(g: Skeleton, restrict_to_core: bool = False) -> float:
    """Shortest cycle length; ``inf`` for forests.

    With ``restrict_to_core`` only cycles through a core vertex count.  A
    cycle found from a root via two different root branches always passes
    through the root, so scanning core roots is exact.
    """
    if g.num_edges == 0:
        raise SkeletonError("girth needs at least one edge")
    roots = g.core_vertices() if restrict_to_core else range(g.n)
    best = INFINITE_GIRTH
    for s in roots:
        best = _shortest_cycle_through(g, s, best)
        if best == 3:
            break
    return int(best) if best != INFINITE_GIRTH else best


def diameter(g: Skeleton, restrict_to_core: bool = False) -> float:
    verts = g.core_vertices() if restrict_to_core else list(range(g.n))
    d = apsp(g, verts)[:, verts]
    if (d == UNREACHABLE).any():
        return float("inf")
    return int(d.max())


def is_isometric_subgraph(h: Skeleton, g: Skeleton, vertex_map: Sequence[int],
                          g_dist: np.ndarray | None = None) -> bool:
    """True iff d_H(u,v) = d_G(map u, map v) for every pair of vertices of H.

    ``h`` must be the induced subgraph of ``g`` on the image of the map.
    """
    vertex_map = list(vertex_map)
    if len(vertex_map) != h.n:
        raise SkeletonError("vertex map length differs from |V(H)|")
    if len(set(vertex_map)) != len(vertex_map):
        raise SkeletonError("vertex map is not injective")
    image = set(vertex_map)
    for i, v in enumerate(vertex_map):
        want = sorted(vertex_map.index(u) for u in g.adj[v] if u in image)
        if want != list(h.adj[i]):
            raise SkeletonError(f"H is not the induced subgraph of G at vertex {i}")
    dh = apsp(h)
    if g_dist is None:
        dg = apsp(g, vertex_map)[:, vertex_map]
    else:
        dg = g_dist[np.ix_(vertex_map, vertex_map)]
    return bool(np.array_equal(dh, dg))


def check_metric(d: np.ndarray, g: Skeleton | None = None) -> None:
    """Assert the metric axioms (and edge consistency when ``g`` is given)."""
    if not np.array_equal(d, d.T):
        raise AssertionError("distance matrix is not symmetric")
    if np.diag(d).any():
        raise AssertionError("non-zero diagonal")
    x = d.astype(np.int64)
    for k in range(d.shape[0]):
        if (x > x[:, [k]] + x[[k], :]).any():
            raise AssertionError(f"triangle inequality fails through {k}")
    if g is not None:
        adj = np.zeros_like(d, dtype=bool)
        for u, v in g.edges():
            adj[u, v] = adj[v, u] = True
        if not np.array_equal(adj, d == 1):
            raise AssertionError("d(u,v) = 1 does not match the edge set")


def core_distances(patch: Skeleton) -> dict[tuple[int, int], int]:
    """Core-core distances keyed by generator ids (stable across margins)."""
    ids = patch.meta.get("gen_ids") or tuple(range(patch.n))
    core = patch.core_vertices()
    d = apsp(patch, core)[:, core]
    out = {}
    for i, u in enumerate(core):
        for j, v in enumerate(core):
            if i < j:
                out[(ids[u], ids[v])] = int(d[i, j])
    return out


def distance_stability(sym, radius: int, margin: int | None = None, *,
                       max_vertices: int = DEFAULT_MAX_VERTICES) -> bool:
    """Do core-core distances agree between margins ``M`` and ``M + 2``?"""
    a = tiling_patch(sym, radius, margin, max_vertices=max_vertices)
    b = tiling_patch(sym, radius, a.margin + 2, max_vertices=max_vertices)
    da, db = core_distances(a), core_distances(b)
    return da.keys() == db.keys() and all(da[k] == db[k] for k in da)
