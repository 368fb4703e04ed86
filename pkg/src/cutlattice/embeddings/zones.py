"""Alternated zones on planar patches.

Every edge carries ``scale`` tokens.  Inside a face of length ``L`` with
``t = L // 2`` and edges ``e_0..e_{L-1}`` in ccw order:

* scale 1 (even faces only): token of ``e_i`` continues to ``e_{i+t}``;
* scale 2: token ``(e_i, +)`` continues to ``(e_{i+t}, -)``.  For odd ``L``
  the two tokens of an edge leave through the two nearly-opposite edges
  ``e_{i+t}`` and ``e_{i+t+1}``, and since the sign flips in every face a
  zone turns right and left alternately.

Tokens keep their sign across an edge.  A zone is a connected chain of
tokens; each zone is one coordinate and a vertex's bit is the parity of
zone crossings on a path from the base vertex.  The labelling is always
checked with ``verify``; a failure says nothing about embeddability.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from ..skeletons.core import Skeleton
from .core import CutDecomposition, Embedding, verify

SAME = "same"
ORIENTED = "oriented"


@dataclass(frozen=True)
class ZoneResult:
    embedding: Embedding | None
    decomposition: CutDecomposition | None
    zones: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False)
    edges: tuple[tuple[int, int], ...] = field(repr=False)
    reason: str | None = None
    variant: str | None = None

    @property
    def ok(self) -> bool:
        return self.embedding is not None

    def __bool__(self) -> bool:
        return self.ok

    @property
    def num_zones(self) -> int:
        return len(self.zones)

    def zone_edges(self) -> list[set[int]]:
        """Edge ids crossed by each zone."""
        return [{e for e, _ in z} for z in self.zones]


def _proper_faces(g: Skeleton) -> list[tuple[int, ...]]:
    return [f for f in (g.faces or ()) if len(f) >= 3 and len(set(f)) == len(f)]


def _edge_ids(g: Skeleton) -> tuple[list[tuple[int, int]], dict[tuple[int, int], int]]:
    edges = g.edges()
    return edges, {e: i for i, e in enumerate(edges)}


def _face_edges(face, eid) -> list[int]:
    L = len(face)
    out = []
    for i in range(L):
        a, b = face[i], face[(i + 1) % L]
        out.append(eid[(min(a, b), max(a, b))])
    return out


def trace_zones(g: Skeleton, scale: int, variant: str = SAME):
    """Zones as lists of tokens ``(edge id, sign)``, each in traversal order."""
    edges, eid = _edge_ids(g)
    faces = _proper_faces(g)
    partner: dict[tuple[int, int], list[tuple[int, int]]] = {}

    def link(a, b):
        partner.setdefault(a, []).append(b)
        partner.setdefault(b, []).append(a)

    for face in faces:
        L = len(face)
        fe = _face_edges(face, eid)
        t = L // 2
        if scale == 1:
            if L % 2:
                raise ValueError("scale-1 zones need even faces")
            for i in range(t):
                link((fe[i], 0), (fe[i + t], 0))
            continue
        for i in range(L):
            j = (i + t) % L
            si, sj = 0, 1
            if variant == ORIENTED:
                # the token sign is read relative to the edge's direction in this face
                if face[i] > face[(i + 1) % L]:
                    si ^= 1
                if face[j] > face[(j + 1) % L]:
                    sj ^= 1
            link((fe[i], si), (fe[j], sj))

    tokens = [(e, s) for e in range(len(edges)) for s in range(scale)]
    seen: set[tuple[int, int]] = set()
    zones = []

    def walk(start):
        chain = [start]
        seen.add(start)
        prev, cur = None, start
        while True:
            nxt = [x for x in partner.get(cur, []) if x != prev or partner[cur].count(x) > 1]
            nxt = [x for x in nxt if x not in seen]
            if not nxt:
                return chain
            prev, cur = cur, nxt[0]
            seen.add(cur)
            chain.append(cur)

    # open zones first (start at a token with fewer than two partners), then cycles
    for tok in tokens:
        if tok not in seen and len(partner.get(tok, [])) < 2:
            zones.append(tuple(walk(tok)))
    for tok in tokens:
        if tok not in seen:
            zones.append(tuple(walk(tok)))
    return zones, edges


def _labels_from_zones(g: Skeleton, zones, edges) -> np.ndarray:
    flips: list[list[int]] = [[] for _ in edges]
    for z, chain in enumerate(zones):
        for e, _ in chain:
            flips[e].append(z)
    eid = {e: i for i, e in enumerate(edges)}
    faced = set()
    for face in _proper_faces(g):
        faced.update(_face_edges(face, eid))
    labels = np.zeros((g.n, len(zones)), dtype=np.uint8)
    done = np.zeros(g.n, dtype=bool)
    done[0] = True
    # faced edges first so labels follow the cell structure where it exists
    for allowed in (faced, None):
        todo = deque(np.flatnonzero(done).tolist())
        while todo:
            v = todo.popleft()
            for u in g.adj[v]:
                if done[u]:
                    continue
                e = eid[(min(u, v), max(u, v))]
                if allowed is not None and e not in allowed:
                    continue
                labels[u] = labels[v]
                for z in flips[e]:
                    labels[u, z] ^= 1
                done[u] = True
                todo.append(u)
    return labels


def zone_embed(g: Skeleton, scale: int | None = None, *, restrict_to_core: bool = True,
               variant: str | None = None, d: np.ndarray | None = None) -> ZoneResult:
    """Embed a faced planar skeleton by its alternated zones.

    ``scale`` defaults to 1 when every face is even and 2 otherwise.  Without
    an explicit ``variant`` both token identifications are tried.
    """
    faces = _proper_faces(g)
    if not faces:
        return ZoneResult(None, None, (), (), "skeleton has no face data")
    odd = any(len(f) % 2 for f in faces)
    if scale is None:
        scale = 2 if odd else 1
    if scale not in (1, 2):
        return ZoneResult(None, None, (), (), f"zone tracing supports scale 1 or 2, not {scale}")
    if scale == 1 and odd:
        return ZoneResult(None, None, (), (), "odd faces need scale 2")
    variants = [variant] if variant else ([SAME] if scale == 1 else [SAME, ORIENTED])
    last = None
    for var in variants:
        zones, edges = trace_zones(g, scale, var)
        bad = next((z for z in zones if len({e for e, _ in z}) < len(z)), None)
        if bad is not None:
            last = ZoneResult(None, None, tuple(zones), tuple(edges),
                              f"a zone crosses edge {edges[bad[0][0]]} twice", var)
            continue
        labels = _labels_from_zones(g, zones, edges)
        emb = Embedding(scale, labels)
        check = verify(g, emb, restrict_to_core=restrict_to_core, d=d)
        if check:
            return ZoneResult(emb, CutDecomposition.from_embedding(emb), tuple(zones), tuple(edges),
                              None, var)
        last = ZoneResult(None, None, tuple(zones), tuple(edges),
                          f"zone labelling fails verification at {check.witness}", var)
    return last


# -- direction families (Euclidean patches) ------------------------------------

def edge_directions(g: Skeleton) -> dict[int, int]:
    """Parallel class of every faced edge of a Euclidean regular patch.

    The half-turn about an edge midpoint swaps the two faces on that edge, so
    slot ``s + j`` of one face is parallel to slot ``s' + j`` of the other.
    Even faces have ``L/2`` directions (opposite edges parallel), triangles 3.
    """
    edges, eid = _edge_ids(g)
    faces = _proper_faces(g)
    fe = [_face_edges(f, eid) for f in faces]
    by_edge: dict[int, list[tuple[int, int]]] = {}
    for fi, es in enumerate(fe):
        for s, e in enumerate(es):
            by_edge.setdefault(e, []).append((fi, s))
    offset: dict[int, int] = {}
    direction: dict[int, int] = {}
    for root in range(len(faces)):
        if root in offset:
            continue
        offset[root] = 0
        todo = deque([root])
        while todo:
            fi = todo.popleft()
            L = len(faces[fi])
            t = L // 2 if L % 2 == 0 else L
            for s, e in enumerate(fe[fi]):
                dval = (s + offset[fi]) % t
                if direction.setdefault(e, dval) != dval:
                    raise ValueError(f"inconsistent direction on edge {edges[e]}")
                for fj, s2 in by_edge[e]:
                    if fj != fi and fj not in offset:
                        offset[fj] = offset[fi] + s - s2
                        todo.append(fj)
    return direction


def direction_families(g: Skeleton, edge_sets) -> int:
    """Number of distinct direction families among zones (or Θ-classes).

    A zone's family is the set of edge directions it crosses; partial zones
    at the patch boundary whose family is contained in a larger one are
    folded into it.
    """
    direction = edge_directions(g)
    fams = {frozenset(direction[e] for e in es if e in direction) for es in edge_sets}
    fams.discard(frozenset())
    maximal = [f for f in fams if not any(f < h for h in fams)]
    return len(maximal)
