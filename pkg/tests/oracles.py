"""Independent reference computations used only by the tests."""
from __future__ import annotations

import itertools
from collections import deque

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp


def bfs_distances(adj) -> list[list[float]]:
    """Plain-Python all-pairs BFS; unreachable pairs are ``inf``."""
    n = len(adj)
    out = []
    for s in range(n):
        dist = [float("inf")] * n
        dist[s] = 0
        todo = deque([s])
        while todo:
            v = todo.popleft()
            for u in adj[v]:
                if dist[u] == float("inf"):
                    dist[u] = dist[v] + 1
                    todo.append(u)
        out.append(dist)
    return out


def milp_cut_decomposition(d, scale: int) -> dict[frozenset, int] | None:
    """Integer program over all cuts: ``sum mu_S delta_S = scale * d``, or None."""
    d = np.asarray(d)
    n = d.shape[0]
    cuts = [frozenset(s) | {0} for r in range(0, n - 1) for s in itertools.combinations(range(1, n), r)]
    pairs = list(itertools.combinations(range(n), 2))
    A = np.array([[int((u in S) != (v in S)) for S in cuts] for u, v in pairs], dtype=float)
    b = np.array([scale * d[u, v] for u, v in pairs], dtype=float)
    res = milp(np.zeros(len(cuts)), constraints=LinearConstraint(A, b, b),
               integrality=np.ones(len(cuts)), bounds=Bounds(0, np.inf))
    if res.status != 0:
        return None
    x = np.rint(res.x).astype(int)
    return {S: int(m) for S, m in zip(cuts, x) if m}


def backtrack_labels(d, scale: int, dim: int) -> list[int] | None:
    """Any integer labels with popcount(l_u ^ l_v) = scale * d(u,v); vertex 0 is zero."""
    d = np.asarray(d)
    n = d.shape[0]
    labels = [0]

    def rec(v):
        if v == n:
            return True
        for lab in range(1 << dim):
            if all(bin(lab ^ labels[u]).count("1") == scale * d[u, v] for u in range(v)):
                labels.append(lab)
                if rec(v + 1):
                    return True
                labels.pop()
        return False

    return list(labels) if rec(1) else None


def all_kgonal_violations(d, k: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every (smaller side, larger side) split violating the k-gonal inequality, by brute force.

    The inequality only depends on b up to sign, so the smaller side is listed first.
    """
    d = np.asarray(d)
    n = d.shape[0]
    npos = k // 2
    out = []
    for pos in itertools.combinations(range(n), npos):
        rest = [v for v in range(n) if v not in pos]
        for neg in itertools.combinations(rest, k - npos):
            same = sum(d[a, b] for a, b in itertools.combinations(pos, 2)) + \
                sum(d[a, b] for a, b in itertools.combinations(neg, 2))
            cross = sum(d[a, b] for a in pos for b in neg)
            if same > cross:
                out.append((pos, neg))
    return out
