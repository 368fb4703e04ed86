"""The spherical tilings {p,q}: five Platonic solids plus hosohedra/dihedra."""
from __future__ import annotations

import itertools
import math
from collections import deque

import numpy as np

from ..schlafli import SPHERICAL, as_symbol, classify, format_symbol
from .core import Patch, Skeleton, SkeletonError, canonical_face

PHI = (1 + math.sqrt(5)) / 2

SOLID_NAMES = {
    (3, 3): "tetrahedron",
    (4, 3): "cube",
    (3, 4): "octahedron",
    (3, 5): "icosahedron",
    (5, 3): "dodecahedron",
}


def _cyclic(v):
    x, y, z = v
    return [(x, y, z), (y, z, x), (z, x, y)]


def _signs(v):
    """All sign changes of the non-zero entries of ``v``."""
    idx = [i for i, x in enumerate(v) if x != 0]
    out = []
    for s in itertools.product((1, -1), repeat=len(idx)):
        w = list(v)
        for i, si in zip(idx, s):
            w[i] = si * w[i]
        out.append(tuple(w))
    return out


def solid_coordinates(p: int, q: int) -> np.ndarray:
    if (p, q) == (3, 3):
        pts = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    elif (p, q) == (4, 3):
        pts = list(itertools.product((1, -1), repeat=3))
    elif (p, q) == (3, 4):
        pts = [tuple(s * (i == j) for j in range(3)) for i in range(3) for s in (1, -1)]
    elif (p, q) == (3, 5):
        pts = [w for c in _cyclic((0, 1, PHI)) for w in _signs(c)]
    elif (p, q) == (5, 3):
        pts = list(itertools.product((1, -1), repeat=3))
        pts += [w for c in _cyclic((0, 1 / PHI, PHI)) for w in _signs(c)]
    else:
        raise SkeletonError(f"{{{p},{q}}} is not a Platonic solid")
    pts = sorted(set(tuple(round(float(x), 12) for x in pt) for pt in pts))
    return np.array(pts, dtype=float)


def min_distance_edges(coords: np.ndarray, tol: float = 1e-7) -> list[tuple[int, int]]:
    diff = coords[:, None, :] - coords[None, :, :]
    dist = np.sqrt((diff**2).sum(-1))
    np.fill_diagonal(dist, np.inf)
    dmin = dist.min()
    iu, ju = np.nonzero(np.triu(np.abs(dist - dmin) < tol, 1))
    return list(zip(iu.tolist(), ju.tolist()))


def _rotation_from_coords(coords: np.ndarray, adj) -> list[list[int]]:
    """Neighbours of each vertex in ccw order seen from outside the solid."""
    rot = []
    for v, nb in enumerate(adj):
        normal = coords[v] / np.linalg.norm(coords[v])
        ref = coords[nb[0]] - coords[v]
        ref -= normal * ref.dot(normal)
        e1 = ref / np.linalg.norm(ref)
        e2 = np.cross(normal, e1)

        def angle(u):
            w = coords[u] - coords[v]
            return math.atan2(w.dot(e2), w.dot(e1)) % (2 * math.pi)

        rot.append(sorted(nb, key=angle))
    return rot


def trace_faces(rotation, closed=None) -> list[tuple[int, ...]]:
    """Face cycles of a closed rotation system (each dart used once)."""
    n = len(rotation)
    pos = [{u: i for i, u in enumerate(r)} for r in rotation]
    seen = set()
    faces = []
    for u in range(n):
        for w in rotation[u]:
            if (u, w) in seen:
                continue
            face = []
            a, b = u, w
            while (a, b) not in seen:
                seen.add((a, b))
                face.append(a)
                rb = rotation[b]
                c = rb[(pos[b][a] - 1) % len(rb)]
                a, b = b, c
            faces.append(canonical_face(face))
    return faces


def platonic(sym) -> Patch:
    """Full combinatorial polyhedron of a spherical {p,q} (incl. {2,m}, {m,2})."""
    sym = as_symbol(sym)
    if len(sym) != 2 or not sym.is_convex or sym.has_infinity:
        raise SkeletonError(f"platonic() needs a finite convex {{p,q}}, got {sym}")
    if classify(sym) != SPHERICAL:
        raise SkeletonError(f"{format_symbol(sym)} is not spherical")
    p, q = sym.ints()
    text = format_symbol(sym)
    if p == 2:
        # hosohedron: q parallel edges collapse to one; faces keep multiplicity
        return Patch(
            name=f"hosohedron{q}", symbol=text, adj=((1,), (0,)), core=(True, True),
            faces=tuple((0, 1) for _ in range(q)), rotation=((1,), (0,)), closed=(True, True),
        )
    if q == 2:
        adj = tuple(((i - 1) % p, (i + 1) % p) for i in range(p))
        rot = tuple(((i + 1) % p, (i - 1) % p) for i in range(p))
        return Patch(
            name=f"dihedron{p}", symbol=text, adj=adj, core=(True,) * p,
            faces=(tuple(range(p)), canonical_face(tuple(reversed(range(p))))),
            rotation=rot, closed=(True,) * p,
        )
    coords = solid_coordinates(p, q)
    n = len(coords)
    nbrs = [[] for _ in range(n)]
    for u, v in min_distance_edges(coords):
        nbrs[u].append(v)
        nbrs[v].append(u)
    rot = _rotation_from_coords(coords, nbrs)
    faces = sorted(trace_faces(rot))
    return Patch(
        name=SOLID_NAMES[(p, q)], symbol=text, adj=tuple(tuple(x) for x in nbrs),
        core=(True,) * n, faces=tuple(faces), coords=tuple(map(tuple, coords.tolist())),
        rotation=tuple(tuple(r) for r in rot), closed=(True,) * n,
    )


def _bfs(g: Skeleton, s: int) -> list[int]:
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


def antipodal_map(g: Skeleton) -> list[int]:
    """The fixed-point-free involutive automorphism pairing diametral vertices."""
    rows = [_bfs(g, s) for s in range(g.n)]
    if any(d < 0 for row in rows for d in row):
        raise SkeletonError("graph is disconnected")
    diam = max(max(r) for r in rows)
    anti = []
    for v, row in enumerate(rows):
        far = [u for u, d in enumerate(row) if d == diam]
        if len(far) != 1:
            raise SkeletonError(f"vertex {v} has {len(far)} vertices at the diameter, not one")
        anti.append(far[0])
    for v in range(g.n):
        if anti[anti[v]] != v or anti[v] == v:
            raise SkeletonError("diametral pairing is not a fixed-point-free involution")
    for u, v in g.edges():
        if not g.has_edge(anti[u], anti[v]):
            raise SkeletonError("diametral pairing is not an automorphism")
    return anti


def antipodal_quotient(g: Skeleton, name: str | None = None) -> Skeleton:
    anti = antipodal_map(g)
    reps = sorted({min(v, anti[v]) for v in range(g.n)})
    cls = {r: i for i, r in enumerate(reps)}
    idx = [cls[min(v, anti[v])] for v in range(g.n)]
    edges = {(min(idx[u], idx[v]), max(idx[u], idx[v])) for u, v in g.edges() if idx[u] != idx[v]}
    return Skeleton.from_edges(name or f"{g.name}/antipodal", len(reps), sorted(edges))


__all__ = ["platonic", "antipodal_quotient", "antipodal_map", "trace_faces", "solid_coordinates"]
