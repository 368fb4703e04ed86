from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import networkx as nx


class SkeletonError(ValueError):
    pass


class ResourceLimitError(RuntimeError):
    """A generator or search would exceed its configured budget."""


@dataclass(frozen=True, eq=False)
class Skeleton:
    """Finite simple undirected graph with optional geometric / patch data.

    ``adj[v]`` is the sorted neighbour tuple of ``v``.  ``core`` marks the
    vertices whose distances are trusted (all True for finite polytopes).
    """

    name: str
    adj: tuple[tuple[int, ...], ...]
    symbol: str | None = None
    core: tuple[bool, ...] | None = None
    faces: tuple[tuple[int, ...], ...] | None = None
    coords: tuple[tuple[float, ...], ...] | None = None
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        adj = tuple(tuple(sorted(set(nb))) for nb in self.adj)
        object.__setattr__(self, "adj", adj)
        n = len(adj)
        for v, nb in enumerate(adj):
            for u in nb:
                if u == v:
                    raise SkeletonError(f"loop at vertex {v}")
                if not 0 <= u < n:
                    raise SkeletonError(f"neighbour {u} of {v} out of range")
        for v, nb in enumerate(adj):
            for u in nb:
                if v not in adj[u]:
                    raise SkeletonError(f"asymmetric adjacency {v}-{u}")
        if self.core is not None:
            if len(self.core) != n:
                raise SkeletonError("core flag length mismatch")
            object.__setattr__(self, "core", tuple(bool(c) for c in self.core))
        if self.faces is not None:
            object.__setattr__(self, "faces", tuple(tuple(f) for f in self.faces))
        if self.coords is not None:
            if len(self.coords) != n:
                raise SkeletonError("coordinate count mismatch")
            object.__setattr__(self, "coords", tuple(tuple(c) for c in self.coords))

    @classmethod
    def from_edges(cls, name: str, n: int, edges: Iterable[tuple[int, int]], **kw) -> "Skeleton":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                continue
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(name=name, adj=tuple(tuple(s) for s in nbrs), **kw)

    @property
    def n(self) -> int:
        return len(self.adj)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in enumerate(self.adj) for v in nb if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def core_vertices(self) -> list[int]:
        if self.core is None:
            return list(range(self.n))
        return [v for v, c in enumerate(self.core) if c]

    def is_core(self, v: int) -> bool:
        return self.core is None or self.core[v]

    def is_bipartite(self) -> bool:
        return two_coloring(self) is not None

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        todo = deque([0])
        while todo:
            v = todo.popleft()
            for u in self.adj[v]:
                if u not in seen:
                    seen.add(u)
                    todo.append(u)
        return len(seen) == self.n

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def induced(self, vertices: Sequence[int], name: str | None = None) -> "Skeleton":
        """Induced subgraph; vertex i of the result is ``vertices[i]``."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise SkeletonError("repeated vertex in induced subgraph")
        adj = [[index[u] for u in self.adj[v] if u in index] for v in vertices]
        return Skeleton(name=name or f"{self.name}[induced]", adj=tuple(tuple(a) for a in adj))

    def with_name(self, name: str) -> "Skeleton":
        return replace(self, name=name)

    # -- JSON -------------------------------------------------------------

    def to_dict(self) -> dict:
        d: dict = {"name": self.name}
        if self.symbol is not None:
            d["symbol"] = self.symbol
        d["n"] = self.n
        d["adj"] = [list(nb) for nb in self.adj]
        if self.core is not None:
            d["core"] = list(self.core)
        if self.faces is not None:
            d["faces"] = [list(f) for f in self.faces]
        if self.coords is not None:
            d["coords"] = [list(c) for c in self.coords]
        return d

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @staticmethod
    def from_dict(d: dict) -> "Skeleton":
        for key in ("name", "n", "adj"):
            if key not in d:
                raise SkeletonError(f"skeleton JSON lacks {key!r}")
        if len(d["adj"]) != d["n"]:
            raise SkeletonError("'n' does not match the adjacency length")
        kw = dict(
            name=d["name"],
            adj=tuple(tuple(nb) for nb in d["adj"]),
            symbol=d.get("symbol"),
            core=tuple(d["core"]) if d.get("core") is not None else None,
            faces=tuple(tuple(f) for f in d["faces"]) if d.get("faces") is not None else None,
            coords=tuple(tuple(c) for c in d["coords"]) if d.get("coords") is not None else None,
        )
        if "rotation" in d:
            return Patch(
                **kw,
                rotation=tuple(tuple(r) for r in d["rotation"]),
                closed=tuple(d.get("closed") or [False] * d["n"]),
                radius=d.get("radius"),
                margin=d.get("margin"),
            )
        return Skeleton(**kw)

    @staticmethod
    def from_json(text: str) -> "Skeleton":
        return Skeleton.from_dict(json.loads(text))


@dataclass(frozen=True, eq=False)
class Patch(Skeleton):
    """Skeleton carrying a rotation system and face cycles.

    ``rotation[v]`` lists neighbours counter-clockwise; for ``closed[v]`` it is
    the full cyclic order, otherwise a contiguous arc (boundary vertex).
    Faces are counter-clockwise vertex cycles: a face between consecutive
    neighbours ``a``, ``b`` of ``v`` is traversed ``v, a, ..., b``.
    """

    rotation: tuple[tuple[int, ...], ...] = ()
    closed: tuple[bool, ...] = ()
    radius: int | None = None
    margin: int | None = None

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "rotation", tuple(tuple(r) for r in self.rotation))
        object.__setattr__(self, "closed", tuple(bool(c) for c in self.closed))
        if len(self.rotation) != self.n or len(self.closed) != self.n:
            raise SkeletonError("rotation/closed length mismatch")
        for v, rot in enumerate(self.rotation):
            if set(rot) != set(self.adj[v]):
                raise SkeletonError(f"rotation at {v} does not list its neighbours")

    def next_in_face(self, u: int, w: int) -> int | None:
        """Vertex following ``w`` on the ccw face traversed ``u -> w``."""
        rot = self.rotation[w]
        i = rot.index(u)
        if i == 0:
            return rot[-1] if self.closed[w] else None
        return rot[i - 1]

    def traced_faces(self) -> list[tuple[int, ...]]:
        """Faces recovered from the rotation system (only closed walks)."""
        seen: set[tuple[int, int]] = set()
        out = []
        for u in range(self.n):
            for w in self.rotation[u]:
                if (u, w) in seen:
                    continue
                walk = [u]
                a, b = u, w
                ok = True
                darts = [(u, w)]
                while b != u:
                    walk.append(b)
                    c = self.next_in_face(a, b)
                    if c is None or len(walk) > self.n:
                        ok = False
                        break
                    a, b = b, c
                    darts.append((a, b))
                if ok:
                    seen.update(darts)
                    out.append(tuple(walk))
        return out

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["rotation"] = [list(r) for r in self.rotation]
        d["closed"] = list(self.closed)
        if self.radius is not None:
            d["radius"] = self.radius
        if self.margin is not None:
            d["margin"] = self.margin
        return d


def two_coloring(g: Skeleton) -> list[int] | None:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        todo = deque([s])
        while todo:
            v = todo.popleft()
            for u in g.adj[v]:
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    todo.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def canonical_face(face: Sequence[int]) -> tuple[int, ...]:
    """Rotate a cycle so it starts at its smallest vertex (orientation kept)."""
    i = min(range(len(face)), key=face.__getitem__)
    return tuple(face[i:]) + tuple(face[:i])


def is_isomorphic(a: Skeleton, b: Skeleton) -> bool:
    if a.n != b.n or a.num_edges != b.num_edges:
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    ga, gb = a.to_networkx(), b.to_networkx()
    if nx.weisfeiler_lehman_graph_hash(ga) != nx.weisfeiler_lehman_graph_hash(gb):
        return False
    return nx.is_isomorphic(ga, gb)
