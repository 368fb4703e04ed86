"""Exact integer cut decompositions of ``scale * d`` for small graphs.

Cuts are the ``2^(n-1) - 1`` proper vertex subsets containing vertex 0, in
increasing bitmask order.  The search is a depth-first branch on the pair
(u, v) with positive residual and the fewest usable cuts: branch ``i`` adds
one copy of candidate ``S_i`` and bans ``S_1 .. S_{i-1}`` for the rest of
that subtree, so every multiset is visited once.  A node is cut off when

* a pair with zero residual would be separated (cut dropped from the pool),
* the residual breaks the triangle inequality,
* the rational relaxation over the remaining pool is infeasible.

An empty result is therefore exhaustive.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

from ..metrics import UNREACHABLE, apsp
from ..skeletons.core import ResourceLimitError, Skeleton
from .core import CutDecomposition, Embedding, verify

DEFAULT_N_MAX = 12
DEFAULT_NODE_LIMIT = 2_000_000


class CutconeError(ValueError):
    pass


@dataclass(frozen=True)
class CutconeResult:
    decomposition: CutDecomposition | None
    scale: int
    nodes: int
    num_cuts: int

    @property
    def none_exists(self) -> bool:
        return self.decomposition is None

    def __bool__(self) -> bool:
        return self.decomposition is not None

    def embedding(self) -> Embedding | None:
        return None if self.decomposition is None else self.decomposition.to_embedding()


def canonical_cuts(n: int) -> np.ndarray:
    """Bitmasks of the proper subsets containing vertex 0."""
    return np.arange(1, 2 ** n - 1, 2, dtype=np.int64) if n > 1 else np.zeros(0, dtype=np.int64)


def _separation(cuts: np.ndarray, pairs: np.ndarray) -> np.ndarray:
    bu = (cuts[:, None] >> pairs[None, :, 0]) & 1
    bv = (cuts[:, None] >> pairs[None, :, 1]) & 1
    return (bu != bv).astype(np.int8)


class _Search:
    def __init__(self, n, target, node_limit, use_lp):
        self.n = n
        self.pairs = np.array(list(itertools.combinations(range(n), 2)), dtype=np.int64).reshape(-1, 2)
        self.pidx = {(int(u), int(v)): k for k, (u, v) in enumerate(self.pairs)}
        self.cuts = canonical_cuts(n)
        self.sep = _separation(self.cuts, self.pairs)
        self.sep_bool = self.sep.astype(bool)
        self.target = target
        self.node_limit = node_limit
        self.use_lp = use_lp
        self.nodes = 0
        self.triples = np.array([(self.pidx[(a, b)], self.pidx[(b, c)], self.pidx[(a, c)])
                                 for a, b, c in itertools.combinations(range(n), 3)],
                                dtype=np.int64).reshape(-1, 3)

    def metric_ok(self, r) -> bool:
        if not len(self.triples):
            return True
        x, y, z = r[self.triples[:, 0]], r[self.triples[:, 1]], r[self.triples[:, 2]]
        return bool((x <= y + z).all() and (y <= x + z).all() and (z <= x + y).all())

    def lp_ok(self, r, pool) -> bool:
        idx = np.flatnonzero(pool)
        if not len(idx):
            return not r.any()
        res = linprog(np.zeros(len(idx)), A_eq=self.sep[idx].T.astype(float), b_eq=r.astype(float),
                      bounds=(0, None), method="highs")
        return res.status != 2  # only a proven infeasibility prunes

    def run(self):
        counts: dict[int, int] = {}
        pool = np.ones(len(self.cuts), dtype=bool)
        found = self._dfs(self.target.copy(), pool, counts)
        return found

    def _dfs(self, r, pool, counts):
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise ResourceLimitError(f"cut-cone search exceeded {self.node_limit} nodes")
        if not r.any():
            return dict(counts)
        zero = r == 0
        if zero.any():
            pool = pool & ~self.sep_bool[:, zero].any(axis=1)
        if not self.metric_ok(r):
            return None
        if self.use_lp and not self.lp_ok(r, pool):
            return None
        live = np.flatnonzero(r > 0)
        avail = self.sep_bool[np.ix_(pool, live)].sum(axis=0)
        k = int(np.argmin(avail))
        if avail[k] == 0:
            return None
        p = live[k]
        cands = np.flatnonzero(pool & self.sep_bool[:, p])
        pool = pool.copy()
        for c in cands:
            c = int(c)
            counts[c] = counts.get(c, 0) + 1
            out = self._dfs(r - self.sep[c], pool, counts)
            counts[c] -= 1
            if not counts[c]:
                del counts[c]
            if out is not None:
                return out
            pool[c] = False
        return None


def cutcone_decompose(g: Skeleton, scale: int, *, n_max: int = DEFAULT_N_MAX,
                      node_limit: int = DEFAULT_NODE_LIMIT, use_lp: bool = True,
                      d: np.ndarray | None = None) -> CutconeResult:
    """Integer multiplicities ``mu_S >= 0`` with ``sum mu_S delta_S = scale * d_G``.

    Returns a result whose ``decomposition`` is None when no such multiset
    exists (an exhaustive answer).  Graphs above ``n_max`` vertices raise.
    """
    n = g.n
    if n > n_max:
        raise CutconeError(f"cut-cone search is limited to {n_max} vertices, graph has {n}")
    if scale < 1:
        raise CutconeError("scale must be positive")
    if d is None:
        d = apsp(g)
    d = np.asarray(d, dtype=np.int64)
    if (d == UNREACHABLE).any():
        raise CutconeError("graph is disconnected")
    search = _Search(n, np.zeros(0, dtype=np.int64), node_limit, use_lp)
    target = scale * d[search.pairs[:, 0], search.pairs[:, 1]] if n > 1 else np.zeros(0, dtype=np.int64)
    search.target = target
    # every cut meets a triangle in 0 or 2 pairs, so perimeters must be even
    if len(search.triples) and (target[search.triples].sum(axis=1) % 2).any():
        return CutconeResult(None, scale, 0, len(search.cuts))
    found = search.run()
    if found is None:
        return CutconeResult(None, scale, search.nodes, len(search.cuts))
    cuts = []
    for c, mult in sorted(found.items()):
        mask = int(search.cuts[c])
        side = tuple(v for v in range(n) if mask >> v & 1)
        cuts.append((side, mult))
    dec = CutDecomposition(scale, tuple(cuts), n)
    check = verify(g, dec.to_embedding(), d=d)
    if not check:
        raise AssertionError(f"cut-cone solution fails verification at {check.witness}")
    return CutconeResult(dec, scale, search.nodes, len(search.cuts))


def minimal_scale(g: Skeleton, scales=(1, 2, 4), **kw) -> CutconeResult | None:
    """First scale in ``scales`` admitting a decomposition, else None."""
    for s in scales:
        res = cutcone_decompose(g, s, **kw)
        if res:
            return res
    return None
