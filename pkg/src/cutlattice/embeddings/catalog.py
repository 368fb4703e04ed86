"""Built-in embeddings of small regular graphs, and simplex scale arithmetic.

Every embedding returned here has gone through ``verify`` against the
graph it is stored for.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..metrics import apsp
from ..skeletons.core import Skeleton
from ..skeletons.named import complete_graph, cycle, cycle_product, half_cube, petersen
from ..skeletons.polyhedra import platonic
from ..skeletons.polytopes import cross_polytope, hypercube, simplex
from .core import Embedding, EmbeddingError, concatenate, rescaled, verify
from .cutcone import minimal_scale
from .zones import zone_embed


class CatalogError(KeyError):
    pass


# -- exhaustive label search --------------------------------------------------

def label_search(g: Skeleton, scale: int, dim: int, d: np.ndarray | None = None) -> Embedding | None:
    """First labelling (in a fixed order) with ``hamming = scale * d``, or None.

    Vertex 0 gets the zero word, vertices are labelled in BFS order, and a
    label may only switch on unused coordinates as a prefix of the unused
    ones, so coordinates appear in order of first use.  None is exhaustive.
    """
    if d is None:
        d = apsp(g)
    d = np.asarray(d, dtype=np.int64)
    order = [0]
    seen = {0}
    for v in order:
        for u in g.adj[v]:
            if u not in seen:
                seen.add(u)
                order.append(u)
    if len(order) != g.n:
        return None
    label = [None] * g.n
    label[0] = 0

    def rec(pos, used):
        if pos == len(order):
            return True
        v = order[pos]
        placed = order[:pos]
        w0 = scale * int(d[0, v])
        for j in range(dim - used + 1):
            fresh = ((1 << j) - 1) << used
            for mask in range(1 << used):
                lab = mask | fresh
                if bin(lab).count("1") != w0:
                    continue
                if all(bin(lab ^ label[u]).count("1") == scale * d[u, v] for u in placed):
                    label[v] = lab
                    if rec(pos + 1, used + j):
                        return True
                    label[v] = None
        return False

    if not rec(1, 0):
        return None
    return Embedding.from_ints(scale, label, dim)


# -- families -------------------------------------------------------------------

def cycle_embedding(m: int) -> Embedding:
    """C_m: arcs of length m/2 at scale 1 (even m), arcs of (m+1)/2 vertices at scale 2 (odd m)."""
    if m % 2 == 0:
        lab = [[int((i - j) % m < m // 2) for j in range(m // 2)] for i in range(m)]
        return Embedding(1, np.array(lab, dtype=np.uint8))
    half = (m - 1) // 2
    lab = [[int((i - j) % m <= half) for j in range(m)] for i in range(m)]
    return Embedding(2, np.array(lab, dtype=np.uint8))


def product_embedding(a: Embedding, b: Embedding) -> Embedding:
    """Cartesian product: vertex ``i * b.n + j`` gets ``label_a(i) + label_b(j)``."""
    if a.scale != b.scale:
        lcm = math.lcm(a.scale, b.scale)
        a, b = rescaled(a, lcm // a.scale), rescaled(b, lcm // b.scale)
    left = np.repeat(a.labels, b.n, axis=0)
    right = np.tile(b.labels, (a.n, 1))
    return concatenate(Embedding(a.scale, left), Embedding(b.scale, right))


def weight_one(n: int) -> Embedding:
    """K_n into ½H_n: vertex i is the i-th unit vector."""
    return Embedding(2, np.eye(n, dtype=np.uint8))


def hadamard_code(k: int) -> np.ndarray:
    """``2^k`` words of length ``2^k - 1``, pairwise distance ``2^(k-1)``.

    Word ``i`` has bit ``r - 1`` equal to the parity of ``i & r``; these are
    the rows of the Sylvester Hadamard matrix with the all-ones column dropped.
    """
    N = 1 << k
    return np.array([[bin(i & r).count("1") & 1 for r in range(1, N)] for i in range(N)], dtype=np.uint8)


def subset_cuts(N: int, k: int) -> Embedding:
    """K_N via all k-subset cuts (one of each complementary pair when k = N/2)."""
    subsets = [s for s in itertools.combinations(range(N), k) if 2 * k != N or 0 in s]
    lab = np.array([[int(v in s) for s in subsets] for v in range(N)], dtype=np.uint8)
    # separations of i, j: C(N-2, k-1) from each side
    sep = 2 * math.comb(N - 2, k - 1)
    if 2 * k == N:
        sep //= 2
    return Embedding(sep, lab)


def hadamard_cross(n: int) -> Embedding:
    """β_n from a Hadamard code: rows plus complements (n <= 2^k, scale 2^(k-1))."""
    k = max(2, math.ceil(math.log2(n))) if n > 1 else 2
    rows = np.hstack([np.zeros((1 << k, 1), dtype=np.uint8), hadamard_code(k)])[:n]
    lab = np.empty((2 * n, rows.shape[1]), dtype=np.uint8)
    lab[0::2] = rows
    lab[1::2] = 1 - rows
    return Embedding(rows.shape[1] // 2, lab)


# -- simplex arithmetic ---------------------------------------------------------

@dataclass(frozen=True)
class SimplexScaleParams:
    n: int
    m_n: Fraction
    lambda_n: int
    mu_lower: int

    @property
    def dim(self) -> int:
        """Hypercube dimension ``lambda_n * m_n`` at the extremal ratio."""
        return int(self.lambda_n * self.m_n)

    def to_dict(self) -> dict:
        return {"n": self.n, "m_n": str(self.m_n), "lambda_n": self.lambda_n,
                "mu_lower": self.mu_lower, "dim": self.dim}


def simplex_scale_params(n: int) -> SimplexScaleParams:
    if n < 3:
        raise ValueError("simplex scale arithmetic needs n >= 3")
    m = Fraction(2 * n, n + 1) if n % 2 else Fraction(2 * n + 2, n + 2)
    t = 2
    while (t * m).denominator != 1:
        t += 2
    return SimplexScaleParams(n, m, t, 2 * math.ceil(n / 4))


# names used by the command line and the reproduction report
remark4 = simplex_scale_params
Remark4Params = SimplexScaleParams


def extremal_simplex(n: int) -> Embedding:
    """Embedding of α_n whose dimension/scale ratio is ``m_n``.

    When n+1 or n+2 is a power of two the Hadamard code restricted to n+1
    words gives the smallest scale; otherwise all ``floor((n+1)/2)``-subsets
    are used, whose scale can exceed ``lambda_n`` (first at n = 8).
    """
    N = n + 1
    target = simplex_scale_params(n).m_n
    for k in range(2, N.bit_length() + 1):
        if (1 << k) in (N, N + 1):
            return Embedding(1 << (k - 1), hadamard_code(k)[:N])
    emb = subset_cuts(N, N // 2)
    assert Fraction(emb.dim, emb.scale) == target
    return emb


def two_embeddings_of_simplex(n: int) -> tuple[Embedding, Embedding]:
    """(½H_{n+1} embedding, extremal-ratio embedding) of α_n, both verified."""
    g = simplex(n)
    a, b = weight_one(n + 1), extremal_simplex(n)
    for e in (a, b):
        check = verify(g, e)
        if not check:
            raise AssertionError(f"simplex embedding fails at {check.witness}")
    return a, b


# -- catalog --------------------------------------------------------------------

_SOLIDS = {"tetrahedron": "{3,3}", "octahedron": "{3,4}", "cube": "{4,3}",
           "icosahedron": "{3,5}", "dodecahedron": "{5,3}"}


def _zone(sym):
    g = platonic(sym)
    res = zone_embed(g)
    if not res:
        raise EmbeddingError(res.reason)
    return g, res.embedding


def _alpha3_h3():
    return simplex(3), Embedding.from_labels(2, ["000", "110", "101", "011"])


def _searched(g, scale, dim):
    emb = label_search(g, scale, dim)
    if emb is None:
        raise EmbeddingError(f"no labelling of {g.name} at scale {scale}, dim {dim}")
    return g, emb


def _beta(n):
    g = cross_polytope(n)
    if n == 3:
        lab = ["1100", "0011", "1010", "0101", "1001", "0110"]
        return g, Embedding.from_labels(2, lab)
    if n == 5:
        return g, hadamard_cross(5)
    res = minimal_scale(g)
    if res is None:
        raise EmbeddingError(f"no decomposition of beta{n} at scales 1, 2, 4")
    return g, res.embedding()


_FIXED = {
    "alpha3": _alpha3_h3,
    "alpha3:h3": _alpha3_h3,
    "alpha3:h4": lambda: (simplex(3), weight_one(4)),
    "alpha4": lambda: (simplex(4), extremal_simplex(4)),
    "alpha4:h10": lambda: (simplex(4), extremal_simplex(4)),
    "alpha4:h5": lambda: (simplex(4), weight_one(5)),
    "icosahedron": lambda: _searched(platonic("{3,5}"), 2, 6),
    "petersen": lambda: _searched(petersen(), 2, 6),
}

_PATTERNS = [
    (r"(?:gamma|γ|q)_?(\d+)", lambda m: (hypercube(int(m[1])), Embedding.from_ints(
        1, range(1 << int(m[1])), int(m[1])))),
    (r"(?:alpha|α)_?(\d+)", lambda m: (simplex(int(m[1])), weight_one(int(m[1]) + 1))),
    (r"(?:beta|β)_?(\d+)", lambda m: _beta(int(m[1]))),
    (r"k_?(\d+)", lambda m: (complete_graph(int(m[1])), weight_one(int(m[1])))),
    (r"halfq_?(\d+)", lambda m: (half_cube(int(m[1])), Embedding.from_ints(
        2, [w for w in range(1 << int(m[1])) if bin(w).count("1") % 2 == 0], int(m[1])))),
    (r"c_?(\d+)\s*[x×]\s*c_?(\d+)", lambda m: (cycle_product(int(m[1]), int(m[2])), product_embedding(
        cycle_embedding(int(m[1])), cycle_embedding(int(m[2]))))),
    (r"c_?(\d+)", lambda m: (cycle(int(m[1])), cycle_embedding(int(m[1])))),
]

CATALOG_NAMES = ("gamma3", "alpha3", "alpha3:h4", "beta3", "tetrahedron", "octahedron", "cube",
                 "icosahedron", "dodecahedron", "petersen", "K4", "K6", "alpha4", "alpha4:h5",
                 "beta4", "beta5", "C5", "C6", "C3xC3", "C4xC4", "C3xC4", "halfQ6")


def catalog_entry(name: str) -> tuple[Skeleton, Embedding]:
    """(graph, verified embedding) for a catalog name.

    Names: solids by name, ``gamma<n>``, ``alpha<n>`` (½H_{n+1}; ``alpha3``
    gives ½H_3 and ``alpha4`` the scale-6 10-cube labelling, with ``:h<m>``
    picking the other one), ``beta<n>``, ``K<n>``, ``petersen``, ``C<m>``,
    ``C<a>xC<b>``, ``halfQ<m>``.
    """
    key = name.strip().lower().replace(" ", "").replace("{", "").replace("}", "")
    if key in _FIXED:
        g, emb = _FIXED[key]()
    elif key in _SOLIDS:
        g, emb = _zone(_SOLIDS[key])
    else:
        for pat, build in _PATTERNS:
            m = re.fullmatch(pat, key)
            if m:
                g, emb = build(m)
                break
        else:
            raise CatalogError(f"no catalog embedding named {name!r}")
    check = verify(g, emb)
    if not check:
        raise AssertionError(f"catalog embedding {name} fails at {check.witness}")
    return g, emb


def catalog_embedding(name: str) -> Embedding:
    return catalog_entry(name)[1]
