"""Hypermetric (2k+1)-gonal inequalities and violation search.

For integer weights ``b`` with sum 1 the inequality is
``sum_{i<j} b_i b_j d_ij <= 0``; the form is unchanged by ``b -> -b``, so
sum -1 is accepted too and the vectors below put ``a, b`` (5-gonal) on the
positive side.  With b in {+1,-1} it reads

    (same-sign pair distances)  <=  (opposite-sign pair distances)

and a violation is a tuple whose left side is strictly larger.  Both sides
are reported so a certificate can be re-checked from the distances alone.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .metrics import UNREACHABLE, apsp
from .skeletons.core import ResourceLimitError, Skeleton, SkeletonError

FIVE_GONAL = (1, 1, -1, -1, -1)
SEVEN_GONAL = (1, 1, 1, -1, -1, -1, -1)
B_VECTORS = {5: FIVE_GONAL, 7: SEVEN_GONAL}

DEFAULT_TUPLE_LIMIT = 20_000_000_000


class BudgetExceeded(ResourceLimitError):
    """The tuple budget ran out before the search finished."""


@dataclass(frozen=True)
class ViolationCertificate:
    vertices: tuple[int, ...]
    b: tuple[int, ...]
    lhs: int
    rhs: int
    distances: tuple[tuple[int, ...], ...]

    @property
    def positives(self) -> tuple[int, ...]:
        return tuple(v for v, c in zip(self.vertices, self.b) if c > 0)

    @property
    def negatives(self) -> tuple[int, ...]:
        return tuple(v for v, c in zip(self.vertices, self.b) if c < 0)

    def recheck(self, d: np.ndarray | None = None) -> bool:
        """Re-evaluate both sides, from ``d`` if given else from the embedded submatrix."""
        if d is None:
            sub = np.array(self.distances, dtype=np.int64)
        else:
            idx = list(self.vertices)
            sub = np.asarray(d, dtype=np.int64)[np.ix_(idx, idx)]
            if not np.array_equal(sub, np.array(self.distances)):
                return False
        lhs, rhs = _sides(sub, self.b)
        return lhs == self.lhs and rhs == self.rhs and lhs > rhs

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "b": list(self.b), "lhs": self.lhs,
                "rhs": self.rhs, "distances": [list(r) for r in self.distances]}

    @staticmethod
    def from_dict(d: dict) -> "ViolationCertificate":
        return ViolationCertificate(tuple(d["vertices"]), tuple(d["b"]), int(d["lhs"]), int(d["rhs"]),
                                    tuple(tuple(int(x) for x in r) for r in d["distances"]))


def _sides(sub: np.ndarray, b: Sequence[int]) -> tuple[int, int]:
    lhs = rhs = 0
    for i, j in itertools.combinations(range(len(b)), 2):
        w = b[i] * b[j] * int(sub[i, j])
        if w > 0:
            lhs += w
        else:
            rhs -= w
    return lhs, rhs


def _check_b(b: Sequence[int], size: int):
    if len(b) != size:
        raise SkeletonError(f"b-vector has {len(b)} entries for a {size}-tuple")
    if abs(sum(b)) != 1:
        raise SkeletonError(f"b-vector must sum to +-1, got {sum(b)}")
    if any(int(x) != x for x in b):
        raise SkeletonError("b-vector must be integral")


def kgonal_check(d: np.ndarray, vertices: Sequence[int], b: Sequence[int]) -> ViolationCertificate | None:
    """None when the inequality holds, else a certificate."""
    vertices = tuple(int(v) for v in vertices)
    _check_b(b, len(vertices))
    if len(set(vertices)) != len(vertices):
        raise SkeletonError("hypermetric tuple has repeated vertices")
    sub = np.asarray(d)[np.ix_(vertices, vertices)].astype(np.int64)
    if (sub == UNREACHABLE).any():
        raise SkeletonError("tuple spans disconnected vertices")
    lhs, rhs = _sides(sub, b)
    if lhs <= rhs:
        return None
    return ViolationCertificate(vertices, tuple(int(x) for x in b), lhs, rhs,
                                tuple(tuple(int(x) for x in r) for r in sub))


# -- search -------------------------------------------------------------------

_COMBOS: dict[tuple[int, int], np.ndarray] = {}


def _combos(n: int, r: int) -> np.ndarray:
    key = (n, r)
    if key not in _COMBOS:
        arr = np.fromiter(itertools.chain.from_iterable(itertools.combinations(range(n), r)),
                          dtype=np.int32).reshape(-1, r)
        _COMBOS[key] = arr
    return _COMBOS[key]


class _Budget:
    def __init__(self, limit: int | None):
        self.limit = limit
        self.used = 0

    def charge(self, k: int):
        self.used += k
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(f"hypermetric search exceeded the tuple budget of {self.limit}")


def _scan_positive(d: np.ndarray, pos: tuple[int, ...], rest: np.ndarray, nneg: int,
                   first: bool) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Violating (positives, negatives) with the given positives; negatives from ``rest``."""
    if len(rest) < nneg:
        return []
    c = _combos(len(rest), nneg)
    dp = sum(int(d[a, b]) for a, b in itertools.combinations(pos, 2))
    s = d[np.ix_(pos, rest)].sum(axis=0)
    dr = d[np.ix_(rest, rest)]
    margin = np.full(len(c), dp, dtype=np.int64)
    for i in range(nneg):
        margin -= s[c[:, i]]
        for j in range(i + 1, nneg):
            margin += dr[c[:, i], c[:, j]]
    hits = np.flatnonzero(margin > 0)
    if first:
        hits = hits[:1]
    return [(pos, tuple(int(x) for x in rest[c[h]])) for h in hits]


def _search_subset(d: np.ndarray, verts: Sequence[int], b: Sequence[int], first: bool,
                   budget: _Budget, threads: int = 1):
    """Lexicographic search with every tuple drawn from ``verts``."""
    verts = np.array(sorted(set(int(v) for v in verts)), dtype=np.int64)
    npos = sum(1 for x in b if x > 0)
    nneg = len(b) - npos
    if len(verts) < len(b):
        return []
    positives = list(itertools.combinations(verts.tolist(), npos))

    def job(pos):
        rest = verts[~np.isin(verts, pos)]
        budget.charge(len(_combos(len(rest), nneg)) if len(rest) >= nneg else 0)
        return _scan_positive(d, pos, rest, nneg, first)

    out = []
    if threads <= 1:
        for pos in positives:
            found = job(pos)
            out.extend(found)
            if first and found:
                return out[:1]
        return out
    with ThreadPoolExecutor(max_workers=threads) as pool:
        block = 4 * threads
        for start in range(0, len(positives), block):
            for found in pool.map(job, positives[start:start + block]):
                out.extend(found)
                if first and out:
                    return out[:1]
    return out


def _certificate(d, pos, neg, b):
    verts = tuple(pos) + tuple(neg)
    cert = kgonal_check(d, verts, b)
    if cert is None:
        raise AssertionError("search hit does not recheck")
    return cert


def _pair_stage(g: Skeleton, d: np.ndarray, allowed: set[int], b: Sequence[int], budget: _Budget):
    """5-gonal: a, b at distance 2 as positives, negatives among their common neighbours."""
    nneg = len(b) - sum(1 for x in b if x > 0)
    for a in sorted(allowed):
        for bb in sorted(allowed):
            if bb <= a or d[a, bb] != 2:
                continue
            common = np.array(sorted(set(g.adj[a]) & set(g.adj[bb]) & allowed), dtype=np.int64)
            if len(common) < nneg:
                continue
            budget.charge(len(_combos(len(common), nneg)))
            found = _scan_positive(d, (a, bb), common, nneg, True)
            if found:
                return found
    return []


def _neighbourhoods(g: Skeleton, allowed: set[int]) -> Iterable[list[int]]:
    for v in sorted(allowed):
        yield sorted(({v} | set(g.adj[v])) & allowed)


def find_violation(g: Skeleton, k: int = 5, mode: str = "first", *,
                   subset: Iterable[int] | None = None, d: np.ndarray | None = None,
                   tuple_limit: int | None = DEFAULT_TUPLE_LIMIT, threads: int = 1,
                   staged: bool = True) -> list[ViolationCertificate]:
    """Search ``k``-gonal violations (k in {5, 7}).

    ``mode``: ``first`` (one certificate, or none), ``all`` (every violating
    tuple, full lexicographic enumeration, never pruned) or ``restricted``
    (full enumeration inside ``subset``; combine with ``first=True`` style by
    passing ``mode='restricted-first'``).

    In ``first`` mode the search is staged before falling back to the full
    lexicographic scan: for k = 5 every distance-2 pair (a, b) is tried as
    the positive side with negatives among its common neighbours, then (any
    k) each closed neighbourhood N[v] is searched in full.  Violations live
    in such small diameter-2 sets for all catalog graphs.  Within a stage the
    order is lexicographic; ``staged=False`` gives the lexicographically
    least certificate over the whole graph.
    Patches only draw tuple vertices from the core.
    """
    if k not in B_VECTORS:
        raise SkeletonError(f"k must be 5 or 7, got {k}")
    b = B_VECTORS[k]
    if d is None:
        d = apsp(g)
    d = np.asarray(d, dtype=np.int64)
    allowed = set(g.core_vertices())
    budget = _Budget(tuple_limit)
    first = mode in ("first", "restricted-first")

    if mode in ("restricted", "restricted-first"):
        if subset is None:
            raise SkeletonError("restricted mode needs a vertex subset")
        verts = sorted(set(subset))
        if len(verts) != len(set(verts)) or any(not 0 <= v < g.n for v in verts):
            raise SkeletonError("subset holds invalid vertices")
        found = _search_subset(d, verts, b, first, budget, threads)
    elif mode == "all":
        found = _search_subset(d, sorted(allowed), b, False, budget, threads)
    elif mode == "first":
        core = sorted(allowed)
        if (d[np.ix_(core, core)] == UNREACHABLE).any():
            raise SkeletonError("core is disconnected")
        found = []
        if staged:
            if k == 5:
                found = _pair_stage(g, d, allowed, b, budget)
            if not found:
                seen: set[tuple[int, ...]] = set()
                for verts in _neighbourhoods(g, allowed):
                    key = tuple(verts)
                    if len(verts) < len(b) or key in seen:
                        continue
                    seen.add(key)
                    found = _search_subset(d, verts, b, True, budget, threads)
                    if found:
                        break
        if not found:
            found = _search_subset(d, core, b, True, budget, threads)
    else:
        raise SkeletonError(f"unknown mode {mode!r}")
    return [_certificate(d, pos, neg, b) for pos, neg in found]


def apex_pair_pattern(cert: ViolationCertificate) -> dict | None:
    """Match a 5-gonal certificate to d_ab = 2, d_xy = 1, d_xz = d_yz = 2, a/b-to-x/y/z = 1.

    Returns the labelled vertices or None; x, y, z may be any order of the negatives.
    """
    if len(cert.b) != 5:
        return None
    idx = {v: i for i, v in enumerate(cert.vertices)}
    dist = cert.distances
    a, bb = cert.positives
    def dd(u, v):
        return dist[idx[u]][idx[v]]
    if dd(a, bb) != 2:
        return None
    neg = cert.negatives
    if any(dd(p, q) != 1 for p in (a, bb) for q in neg):
        return None
    for x, y, z in itertools.permutations(neg):
        if x < y and dd(x, y) == 1 and dd(x, z) == 2 and dd(y, z) == 2:
            return {"a": a, "b": bb, "x": x, "y": y, "z": z}
    return None
