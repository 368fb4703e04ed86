"""Small named graphs: complete graphs, cocktail parties, cubes, half-cubes, cycles, products."""
from __future__ import annotations

import itertools
import re

from .core import Skeleton, SkeletonError
from .polytopes import cross_polytope, hypercube


def complete_graph(n: int) -> Skeleton:
    if n < 1:
        raise SkeletonError("K_n needs n >= 1")
    return Skeleton.from_edges(f"K{n}", n, itertools.combinations(range(n), 2))


def cycle(m: int) -> Skeleton:
    if m < 3:
        raise SkeletonError("cycle length must be >= 3")
    return Skeleton.from_edges(f"C{m}", m, [(i, (i + 1) % m) for i in range(m)])


def path(m: int) -> Skeleton:
    """Path with ``m`` edges."""
    return Skeleton.from_edges(f"P{m}", m + 1, [(i, i + 1) for i in range(m)])


def petersen() -> Skeleton:
    """Kneser graph K(5,2): 2-subsets of a 5-set, adjacent when disjoint."""
    subsets = list(itertools.combinations(range(5), 2))
    edges = [(i, j) for i, j in itertools.combinations(range(10), 2)
             if not set(subsets[i]) & set(subsets[j])]
    return Skeleton.from_edges("petersen", 10, edges)


def half_cube(m: int) -> Skeleton:
    """½H_m: even-weight words of length m, adjacent at Hamming distance 2.

    Vertex i is the i-th even-weight word in increasing integer order.
    """
    if m < 2:
        raise SkeletonError("half-cube needs m >= 2")
    words = [w for w in range(1 << m) if bin(w).count("1") % 2 == 0]
    index = {w: i for i, w in enumerate(words)}
    edges = [(index[w], index[w ^ (1 << a) ^ (1 << b)])
             for w in words for a, b in itertools.combinations(range(m), 2)]
    return Skeleton.from_edges(f"halfQ{m}", len(words), edges)


def complete_minus_triangle() -> Skeleton:
    """K_5 − K_3: vertices 0,1 adjacent to everything, 2,3,4 independent."""
    edges = [(0, 1)] + [(a, x) for a in (0, 1) for x in (2, 3, 4)]
    return Skeleton.from_edges("K5-K3", 5, edges)


def complete_bipartite(a: int, b: int) -> Skeleton:
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return Skeleton.from_edges(f"K{a},{b}", a + b, edges)


def cycle_product(a: int, b: int) -> Skeleton:
    """C_a × C_b (torus map {4,4} with a·b squares); vertex (i,j) ↦ i·b + j."""
    if a < 3 or b < 3:
        raise SkeletonError("cycle_product needs a, b >= 3")
    edges = []
    for i in range(a):
        for j in range(b):
            v = i * b + j
            edges.append((v, ((i + 1) % a) * b + j))
            edges.append((v, i * b + (j + 1) % b))
    return Skeleton.from_edges(f"C{a}xC{b}", a * b, edges)


def pyramid(g: Skeleton) -> Skeleton:
    """Add an apex (the last vertex) joined to every vertex of ``g``."""
    apex = g.n
    edges = g.edges() + [(v, apex) for v in range(g.n)]
    return Skeleton.from_edges(f"pyramid({g.name})", g.n + 1, edges)


_PATTERNS = [
    (re.compile(r"k_?\{?(\d+)\s*[x×]\s*2\}?"), lambda m: cross_polytope(int(m[1]))),
    (re.compile(r"k_?(\d+)\s*,\s*(\d+)"), lambda m: complete_bipartite(int(m[1]), int(m[2]))),
    (re.compile(r"k5\s*-\s*k3"), lambda m: complete_minus_triangle()),
    (re.compile(r"k_?(\d+)"), lambda m: complete_graph(int(m[1]))),
    (re.compile(r"(?:half ?q|halfcube|½h)_?(\d+)"), lambda m: half_cube(int(m[1]))),
    (re.compile(r"(?:q|h|cube)_?(\d+)"), lambda m: hypercube(int(m[1]))),
    (re.compile(r"c_?(\d+)\s*[x×]\s*c_?(\d+)"), lambda m: cycle_product(int(m[1]), int(m[2]))),
    (re.compile(r"c_?(\d+)"), lambda m: cycle(int(m[1]))),
    (re.compile(r"p_?(\d+)"), lambda m: path(int(m[1]))),
    (re.compile(r"petersen"), lambda m: petersen()),
]


def named_graph(name: str) -> Skeleton:
    """Build a graph from names like ``petersen``, ``K6``, ``K_{4x2}``, ``Q3``, ``halfQ6``, ``C5``."""
    key = name.strip().lower().replace(" ", "")
    for pat, build in _PATTERNS:
        m = pat.fullmatch(key)
        if m:
            return build(m)
    raise SkeletonError(f"unknown named graph {name!r}")
