"""Coordinate-built regular 4-polytopes, star 4-polytopes and the infinite families."""
from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

from ..schlafli import SchlafliSymbol, as_symbol, format_symbol
from .core import Skeleton, SkeletonError

PHI = (1 + math.sqrt(5)) / 2
_TOL = 1e-9


def _even_permutations(n: int):
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        if inversions % 2 == 0:
            yield perm


@lru_cache(maxsize=None)
def icosians() -> np.ndarray:
    """The 120 unit icosians (vertices of the 600-cell), lexicographically sorted."""
    pts = set()
    for i in range(4):
        for s in (1, -1):
            v = [0.0] * 4
            v[i] = float(s)
            pts.add(tuple(v))
    for signs in itertools.product((0.5, -0.5), repeat=4):
        pts.add(signs)
    base = (0.0, 0.5, PHI / 2, 1 / (2 * PHI))
    for perm in _even_permutations(4):
        for s in itertools.product((1, -1), repeat=3):
            v = [0.0] * 4
            v[perm[0]] = 0.0
            v[perm[1]] = s[0] * base[1]
            v[perm[2]] = s[1] * base[2]
            v[perm[3]] = s[2] * base[3]
            pts.add(tuple(round(x, 12) + 0.0 for x in v))
    arr = np.array(sorted(pts))
    if arr.shape != (120, 4):
        raise SkeletonError(f"icosian construction produced {arr.shape[0]} points")
    return arr


def inner_product_class(coords: np.ndarray, value: float) -> list[tuple[int, int]]:
    gram = coords @ coords.T
    iu, ju = np.nonzero(np.triu(np.abs(gram - value) < _TOL, 1))
    return list(zip(iu.tolist(), ju.tolist()))


def nearest_neighbour_edges(coords: np.ndarray) -> list[tuple[int, int]]:
    diff = coords[:, None, :] - coords[None, :, :]
    dist = np.sqrt((diff**2).sum(-1))
    np.fill_diagonal(dist, np.inf)
    dmin = dist.min()
    iu, ju = np.nonzero(np.triu(np.abs(dist - dmin) < 1e-7, 1))
    return list(zip(iu.tolist(), ju.tolist()))


def _from_coords(name, symbol, coords, edges, **kw) -> Skeleton:
    return Skeleton.from_edges(
        name, len(coords), edges, symbol=symbol, core=(True,) * len(coords),
        coords=tuple(map(tuple, np.asarray(coords).tolist())), **kw,
    )


def cell_600() -> Skeleton:
    c = icosians()
    return _from_coords("600-cell", "{3,3,5}", c, inner_product_class(c, PHI / 2))


def cell_24() -> Skeleton:
    pts = set()
    for i, j in itertools.combinations(range(4), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [0.0] * 4
            v[i], v[j] = float(si), float(sj)
            pts.add(tuple(v))
    c = np.array(sorted(pts))
    return _from_coords("24-cell", "{3,4,3}", c, inner_product_class(c, 1.0))


def tetrahedral_cells(g: Skeleton) -> list[tuple[int, int, int, int]]:
    """All 4-cliques, sorted."""
    out = set()
    for u, v in g.edges():
        common = sorted(set(g.adj[u]) & set(g.adj[v]))
        for a, b in itertools.combinations(common, 2):
            if g.has_edge(a, b):
                out.add(tuple(sorted((u, v, a, b))))
    return sorted(out)


def cell_120() -> Skeleton:
    """120-cell as the dual of the 600-cell: cell centres joined across shared triangles."""
    g600 = cell_600()
    cells = tetrahedral_cells(g600)
    c = np.asarray(g600.coords)
    centres = np.array([c[list(t)].mean(axis=0) for t in cells])
    by_face: dict[tuple, list[int]] = {}
    for i, t in enumerate(cells):
        for face in itertools.combinations(t, 3):
            by_face.setdefault(face, []).append(i)
    edges = []
    for face, owners in by_face.items():
        if len(owners) != 2:
            raise SkeletonError(f"triangle {face} lies in {len(owners)} cells")
        edges.append(tuple(owners))
    return _from_coords("120-cell", "{5,3,3}", centres, edges, meta={"cells_of_600": tuple(cells)})


def regular_4polytope(name: str) -> Skeleton:
    key = name.strip().lower().replace("_", "-")
    table = {
        "24-cell": cell_24, "24": cell_24, "{3,4,3}": cell_24,
        "600-cell": cell_600, "600": cell_600, "{3,3,5}": cell_600,
        "120-cell": cell_120, "120": cell_120, "{5,3,3}": cell_120,
    }
    if key not in table:
        raise SkeletonError(f"unknown regular 4-polytope {name!r} (α4, β4, γ4 come from polytope_family)")
    return table[key]()


STAR_4POLYTOPES = {
    # (i): the two with the icosian inner-product-1/2 skeleton
    "{5/2,5,3}": "icosian-half", "{5,5/2,3}": "icosian-half",
    # (ii)
    "{5/2,3,3}": "120-cell",
    # (iii)
    "{3,3,5/2}": "600-cell", "{3,5,5/2}": "600-cell", "{5,3,5/2}": "600-cell",
    "{5/2,3,5}": "600-cell", "{3,5/2,5}": "600-cell", "{5/2,5,5/2}": "600-cell",
    "{5,5/2,5}": "600-cell",
}


def stellated_120cell() -> Skeleton:
    """Skeleton of {5/2,5,3}: icosians joined at inner product 1/2."""
    c = icosians()
    return _from_coords("{5/2,5,3}", "{5/2,5,3}", c, inner_product_class(c, 0.5))


def star_4polytope(sym) -> Skeleton:
    text = format_symbol(as_symbol(sym))
    kind = STAR_4POLYTOPES.get(text)
    if kind is None:
        raise SkeletonError(f"{text} is not one of the ten regular star 4-polytopes")
    if kind == "icosian-half":
        sk = stellated_120cell()
    elif kind == "120-cell":
        sk = cell_120()
    else:
        sk = cell_600()
    return Skeleton(name=text, adj=sk.adj, symbol=text, core=sk.core, coords=sk.coords,
                    meta={"isomorphic_to": kind})


# -- infinite families ------------------------------------------------------

def simplex(n: int) -> Skeleton:
    """α_n = K_{n+1}."""
    if n < 1:
        raise SkeletonError("simplex dimension must be >= 1")
    return Skeleton.from_edges(f"alpha{n}", n + 1, itertools.combinations(range(n + 1), 2),
                               symbol=format_symbol(SchlafliSymbol.of(*([3] * (n - 1)))) if n >= 2 else None)


def cross_polytope(n: int) -> Skeleton:
    """β_n = K_{n×2}; vertices 2i and 2i+1 are antipodal."""
    if n < 1:
        raise SkeletonError("cross-polytope dimension must be >= 1")
    edges = [(u, v) for u, v in itertools.combinations(range(2 * n), 2) if u // 2 != v // 2]
    sym = None
    if n >= 2:
        sym = format_symbol(SchlafliSymbol.of(*([3] * (n - 2) + [4])))
    return Skeleton.from_edges(f"beta{n}", 2 * n, edges, symbol=sym)


def hypercube(n: int) -> Skeleton:
    """γ_n; vertex v is the binary word of v (bit i = coordinate i)."""
    if n < 1:
        raise SkeletonError("cube dimension must be >= 1")
    edges = [(v, v ^ (1 << i)) for v in range(1 << n) for i in range(n) if v < v ^ (1 << i)]
    sym = format_symbol(SchlafliSymbol.of(*([4] + [3] * (n - 2)))) if n >= 2 else None
    coords = tuple(tuple(float((v >> i) & 1) for i in range(n)) for v in range(1 << n))
    return Skeleton.from_edges(f"gamma{n}", 1 << n, edges, symbol=sym, coords=coords)


def polytope_family(kind: str, n: int) -> Skeleton:
    k = kind.strip().lower()
    if k in ("alpha", "α", "simplex"):
        return simplex(n)
    if k in ("beta", "β", "cross", "crosspolytope", "cross-polytope"):
        return cross_polytope(n)
    if k in ("gamma", "γ", "cube", "hypercube"):
        return hypercube(n)
    raise SkeletonError(f"unknown polytope family {kind!r}")


def lattice_ball(m: int, r: int) -> Skeleton:
    """l1-ball of radius r in Z^m; vertices within r-1 are core."""
    if m < 1 or r < 0:
        raise SkeletonError("lattice_ball needs m >= 1 and r >= 0")
    pts = [p for p in itertools.product(range(-r, r + 1), repeat=m) if sum(map(abs, p)) <= r]
    index = {p: i for i, p in enumerate(pts)}
    edges = []
    for p, i in index.items():
        for k in range(m):
            q = p[:k] + (p[k] + 1,) + p[k + 1:]
            if q in index:
                edges.append((i, index[q]))
    core = tuple(sum(map(abs, p)) <= r - 1 for p in pts)
    return Skeleton.from_edges(f"Z{m}-ball{r}", len(pts), edges, core=core,
                               coords=tuple(tuple(float(x) for x in p) for p in pts))
