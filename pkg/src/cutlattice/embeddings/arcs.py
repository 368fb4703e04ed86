"""Balance of coordinate steps around short circuits.

Walking a circuit ``v_0 .. v_{t-1}``, edge ``i`` flips a set of
coordinates; its step vector maps each flipped coordinate to +1 (0 -> 1)
or -1.  In a scale-lambda embedding every step has exactly lambda entries,
and on a shortest circuit the steps are balanced: for even t the opposite
edge carries the same coordinates negated, for odd t the negated step
splits lambda/2 + lambda/2 over the two edges meeting at the opposite
vertex.
"""
from __future__ import annotations

from typing import Sequence

from ..metrics import girth
from ..skeletons.core import Skeleton, SkeletonError
from .core import Embedding


def step_vectors(emb: Embedding, cyc: Sequence[int]) -> list[dict[int, int]]:
    t = len(cyc)
    out = []
    for i in range(t):
        a, b = emb.labels[cyc[i]], emb.labels[cyc[(i + 1) % t]]
        out.append({int(k): (1 if b[k] else -1) for k in (a != b).nonzero()[0]})
    return out


def admissible_lengths(g: Skeleton) -> set[int]:
    gg = girth(g)
    if gg == float("inf"):
        return set()
    return {gg, gg + 1} if gg % 2 == 0 else {gg}


def _check_cycle(g: Skeleton, cyc: Sequence[int]):
    if len(set(cyc)) != len(cyc):
        raise SkeletonError("cycle repeats a vertex")
    for i in range(len(cyc)):
        if not g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]):
            raise SkeletonError(f"{cyc[i]}-{cyc[(i + 1) % len(cyc)]} is not an edge")
    if len(cyc) not in admissible_lengths(g):
        raise SkeletonError(f"cycle length {len(cyc)} is not admissible (allowed {sorted(admissible_lengths(g))})")


def balanced_arcs_check(g: Skeleton, emb: Embedding, cyc: Sequence[int]) -> bool:
    _check_cycle(g, cyc)
    lam = emb.scale
    steps = step_vectors(emb, cyc)
    if any(len(s) != lam for s in steps):
        return False
    t = len(cyc)
    for i, s in enumerate(steps):
        neg = {k: -x for k, x in s.items()}
        if t % 2 == 0:
            if steps[(i + t // 2) % t] != neg:
                return False
            continue
        if lam % 2:
            return False
        left, right = steps[(i + t // 2) % t], steps[(i + t // 2 + 1) % t]
        in_left = sum(1 for k, x in neg.items() if left.get(k) == x)
        in_right = sum(1 for k, x in neg.items() if right.get(k) == x)
        # every negated step must be covered, half by each side
        if in_left < lam // 2 or in_right < lam // 2:
            return False
        if any(left.get(k) != x and right.get(k) != x for k, x in neg.items()):
            return False
    return True


def short_cycles(g: Skeleton, length: int | None = None, limit: int | None = None) -> list[tuple[int, ...]]:
    """Cycles of the given length (default: the girth), each listed once."""
    if length is None:
        length = girth(g)
    out = []
    seen = set()

    def extend(path):
        if limit is not None and len(out) >= limit:
            return
        v = path[-1]
        if len(path) == length:
            if g.has_edge(v, path[0]):
                key = frozenset(path), min(path[1], path[-1])
                if path[1] < path[-1] and key not in seen:
                    seen.add(key)
                    out.append(tuple(path))
            return
        for u in g.adj[v]:
            if u > path[0] and u not in path:
                extend(path + [u])

    for s in range(g.n):
        extend([s])
    return out
