"""Finite patches of the regular tilings {p,q}, grown over a rotation system.

The growth is purely combinatorial.  *Completing* a vertex ``v`` adds the
faces missing in the gap of its neighbour arc.  Each new face first walks
along already-present boundary edges (through vertices that have all ``q``
neighbours) and then fills in fresh vertices.

Patches complete vertices in breadth-first order from the base vertex: a
vertex is completed when it is dequeued, so every dequeued vertex has its
full neighbourhood and the BFS distances are those of the infinite tiling.
Growing by face layers instead would be much larger, since one layer of
``p``-gons reaches up to ``p/2`` hops outward.
"""
from __future__ import annotations

from collections import deque

from ..schlafli import EUCLIDEAN, HYPERBOLIC, as_symbol, classify, format_symbol
from .core import Patch, ResourceLimitError, Skeleton, SkeletonError, canonical_face

DEFAULT_MAX_VERTICES = 250_000


class GrowthError(SkeletonError):
    """The rotation system became inconsistent while growing."""


class _Grower:
    def __init__(self, p: int, q: int, max_vertices: int):
        if p < 3 or q < 3:
            raise SkeletonError("growth needs p, q >= 3")
        self.p, self.q = p, q
        self.max_vertices = max_vertices
        self.arcs: list[list[int]] = []
        self.nfaces: list[int] = []
        self.layer: list[int] = []
        self.faces: list[tuple[int, ...]] = []

    def _new(self, layer: int) -> int:
        if len(self.arcs) >= self.max_vertices:
            raise ResourceLimitError(
                f"{{{self.p},{self.q}}} patch exceeds the vertex budget of {self.max_vertices}"
            )
        self.arcs.append([])
        self.nfaces.append(0)
        self.layer.append(layer)
        return len(self.arcs) - 1

    def _add_face(self, cycle: list[int]):
        if len(cycle) != self.p or len(set(cycle)) != self.p:
            raise GrowthError(f"malformed face {cycle}")
        for v in cycle:
            self.nfaces[v] += 1
            if self.nfaces[v] > self.q or len(self.arcs[v]) > self.q:
                raise GrowthError(f"vertex {v} exceeds valence {self.q}")
        self.faces.append(tuple(cycle))

    def seed(self):
        v = self._new(0)
        ring = [self._new(1) for _ in range(self.p - 1)]
        cycle = [v] + ring
        for i, x in enumerate(cycle):
            nxt, prv = cycle[(i + 1) % self.p], cycle[i - 1]
            self.arcs[x] = [nxt, prv]
        self._add_face(cycle)

    def _full(self, x: int) -> bool:
        return len(self.arcs[x]) == self.q

    def _walk_left(self, v: int, cap: int) -> list[int]:
        # ccw along the missing face after the last neighbour of v
        path = [v, self.arcs[v][-1]]
        prev, x = v, path[1]
        while len(path) < cap:
            arc = self.arcs[x]
            if arc[0] != prev:
                raise GrowthError(f"left walk: {prev} is not at the open end of {x}")
            if not self._full(x):
                break
            nxt = arc[-1]
            if nxt == v:
                break
            path.append(nxt)
            prev, x = x, nxt
        return path

    def _walk_right(self, v: int, stop: int, cap: int) -> list[int]:
        path = [v, self.arcs[v][0]]
        prev, x = v, path[1]
        while len(path) < cap and x != stop:
            arc = self.arcs[x]
            if arc[-1] != prev:
                raise GrowthError(f"right walk: {prev} is not at the open end of {x}")
            if not self._full(x):
                break
            nxt = arc[0]
            path.append(nxt)
            prev, x = x, nxt
        return path

    def complete(self, v: int):
        p, q = self.p, self.q
        while self.nfaces[v] < q:
            missing = q - self.nfaces[v]
            lay = self.layer[v] + 1
            if missing > 1:
                left = self._walk_left(v, cap=p)
                xa = left[-1]
                if len(left) == p:
                    if v in self.arcs[xa]:
                        raise GrowthError(f"face closure would duplicate edge {v}-{xa}")
                    self.arcs[xa].insert(0, v)
                    self.arcs[v].append(xa)
                    self._add_face(left)
                    continue
                fresh = [self._new(lay) for _ in range(p - len(left))]
                cycle = left + fresh
                self.arcs[xa].insert(0, fresh[0])
                for i in range(len(left), p):
                    x = cycle[i]
                    self.arcs[x] = [cycle[(i + 1) % p], cycle[i - 1]]
                self.arcs[v].append(fresh[-1])
                self._add_face(cycle)
                continue
            # exactly one face missing: both ends of the gap are known
            left = self._walk_left(v, cap=p + 1)
            u0 = self.arcs[v][0]
            if left[-1] == u0:
                self._add_face(left)
                continue
            right = self._walk_right(v, stop=left[-1], cap=p + 1)
            xa, yb = left[-1], right[-1]
            if xa == yb:
                if len(self.arcs[xa]) != q:
                    raise GrowthError(f"vertex {xa} would close with valence {len(self.arcs[xa])}")
                self._add_face(left + right[-2:0:-1])
                continue
            count = len(left) + len(right) - 1
            if count > p:
                raise GrowthError(f"gap at {v} spans {count} > {p} boundary vertices")
            fresh = [self._new(lay) for _ in range(p - count)]
            chain = [xa] + fresh + [yb]
            for i in range(1, len(chain) - 1):
                self.arcs[chain[i]] = [chain[i + 1], chain[i - 1]]
            if chain[1] in self.arcs[xa] or chain[-2] in self.arcs[yb]:
                raise GrowthError(f"closing face at {v} duplicates an edge")
            self.arcs[xa].insert(0, chain[1])
            self.arcs[yb].append(chain[-2])
            self._add_face(left + fresh + right[:0:-1])

    def run_ball(self, outer: int) -> dict[int, int]:
        """Complete every vertex at distance < ``outer``; returns BFS distances."""
        self.seed()
        dist = {0: 0}
        todo = deque([0])
        while todo:
            v = todo.popleft()
            if dist[v] >= outer:
                break
            if self.nfaces[v] < self.q:
                self.complete(v)
            for u in self.arcs[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    todo.append(u)
        return dist

    def run(self, layers: int | None):
        """Complete every vertex of layer <= ``layers`` (None: until closed)."""
        self.seed()
        i = 0
        while i < len(self.arcs):
            if layers is not None and self.layer[i] > layers:
                break
            if self.nfaces[i] < self.q:
                self.complete(i)
            i += 1


def grow_closed(p: int, q: int, max_vertices: int = 10_000) -> Patch:
    """Grow a spherical {p,q} until no vertex is incomplete.

    Independent of the coordinate construction in ``platonic``; used to
    cross-check it.
    """
    g = _Grower(p, q, max_vertices)
    g.run(None)
    n = len(g.arcs)
    return Patch(
        name=f"grown{{{p},{q}}}", symbol=f"{{{p},{q}}}", adj=tuple(tuple(a) for a in g.arcs),
        core=(True,) * n, faces=tuple(canonical_face(f) for f in g.faces),
        rotation=tuple(tuple(a) for a in g.arcs), closed=tuple(c == q for c in g.nfaces),
    )


def tiling_patch(sym, radius: int, margin: int | None = None, *,
                 max_vertices: int = DEFAULT_MAX_VERTICES) -> Patch:
    """Ball of radius ``radius + margin`` about a base vertex of {p,q}.

    Vertices within ``radius`` are flagged core.  ``margin`` defaults to ``p``.
    Vertex numbering follows creation order, hence is deterministic and the
    same vertex gets the same creation id for any margin (see ``meta['gen_ids']``).
    """
    sym = as_symbol(sym)
    if len(sym) != 2 or not sym.is_convex or sym.has_infinity:
        raise SkeletonError(f"tiling_patch needs a finite convex {{p,q}}, got {sym}")
    kind = classify(sym)
    if kind not in (EUCLIDEAN, HYPERBOLIC):
        raise SkeletonError(f"{format_symbol(sym)} is {kind}; use platonic()")
    p, q = sym.ints()
    if radius < 1:
        raise SkeletonError("radius must be >= 1")
    if margin is None:
        margin = p
    if margin < 0:
        raise SkeletonError("margin must be >= 0")
    outer = radius + margin

    g = _Grower(p, q, max_vertices)
    dist = g.run_ball(outer)
    keep = sorted(dist)
    index = {v: i for i, v in enumerate(keep)}
    rotation = [tuple(index[u] for u in g.arcs[v] if u in index) for v in keep]
    closed = [g.nfaces[v] == q and len(rotation[i]) == q for i, v in enumerate(keep)]
    faces = sorted(
        canonical_face(tuple(index[v] for v in f)) for f in g.faces if all(v in index for v in f)
    )
    return Patch(
        name=f"{{{p},{q}}}-patch-R{radius}-M{margin}",
        symbol=format_symbol(sym),
        adj=tuple(rotation),
        core=tuple(dist[v] <= radius for v in keep),
        faces=tuple(faces),
        rotation=tuple(rotation),
        closed=tuple(closed),
        radius=radius,
        margin=margin,
        meta={"gen_ids": tuple(keep), "base": 0, "kind": kind},
    )


def face_count_at(patch: Patch) -> list[int]:
    cnt = [0] * patch.n
    for f in patch.faces or ():
        for v in f:
            cnt[v] += 1
    return cnt


def interior_vertices(patch: Patch) -> list[int]:
    """Vertices whose full star (q faces) lies in the patch."""
    q = as_symbol(patch.symbol).ints()[1]
    cnt = face_count_at(patch)
    return [v for v in range(patch.n) if cnt[v] == q]


def star_honeycomb_skeleton(m: int, radius: int = 1, *, max_vertices: int = DEFAULT_MAX_VERTICES) -> Skeleton:
    """Skeleton of {m/2, m} (odd m >= 5) on the vertices of {3,m}.

    Around every completed vertex with cyclic neighbours ``u_0..u_{m-1}`` the
    star cell joins ``u_i`` to ``u_{i+2}``.  A vertex is core when every
    {3,m}-neighbour is completed, so all of its star edges are present.
    """
    if m < 5 or m % 2 == 0:
        raise SkeletonError(f"star honeycomb needs odd m >= 5, got {m}")
    if m == 5:
        from .polyhedra import platonic

        base = platonic((3, 5))
    else:
        if radius < 0:
            raise SkeletonError("radius must be >= 0")
        base = tiling_patch((3, m), radius + 1, 1, max_vertices=max_vertices)
    edges = set()
    cells = []
    for v in range(base.n):
        if not base.closed[v]:
            continue
        ring = base.rotation[v]
        cell = [ring[(2 * i) % m] for i in range(m)]
        cells.append((v, tuple(cell)))
        for i in range(m):
            a, b = cell[i], cell[(i + 1) % m]
            edges.add((min(a, b), max(a, b)))
    used = sorted({x for e in edges for x in e})
    index = {v: i for i, v in enumerate(used)}
    core = [all(base.closed[u] for u in base.adj[v]) for v in used]
    sk = Skeleton.from_edges(
        f"{{{m}/2,{m}}}" + ("" if m == 5 else f"-R{radius}"),
        len(used),
        [(index[a], index[b]) for a, b in edges],
        symbol=f"{{{m}/2,{m}}}",
        core=tuple(core),
        meta={
            "base_ids": tuple(used),
            "cells": tuple((index[c], tuple(index[x] for x in cyc)) for c, cyc in cells
                           if c in index and all(x in index for x in cyc)),
        },
    )
    return sk
