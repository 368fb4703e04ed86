"""Scale-1 (partial cube) recognition via the Djoković–Winkler relation.

For an edge ``uv`` let ``W_uv`` be the vertices closer to ``u`` than to
``v``.  In a bipartite graph every vertex is strictly closer to one end.
Edges ``uv`` and ``xy`` are Θ-related iff ``d(u,x) + d(v,y) != d(u,y) + d(v,x)``,
which for bipartite graphs means ``xy`` crosses the cut ``(W_uv, W_vu)``.
The graph is a partial cube iff Θ is transitive, i.e. every edge crossing the
cut of ``uv`` has that same cut.  One coordinate per distinct cut then gives
the isometric labelling.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..metrics import UNREACHABLE, apsp
from ..skeletons.core import Skeleton, two_coloring
from .core import Embedding, verify


@dataclass(frozen=True)
class PartialCubeResult:
    embedding: Embedding | None
    reason: str | None = None
    classes: tuple[tuple[tuple[int, int], ...], ...] = field(default=(), repr=False)

    @property
    def is_partial_cube(self) -> bool:
        return self.embedding is not None

    def __bool__(self) -> bool:
        return self.is_partial_cube


def theta_related(d: np.ndarray, e: tuple[int, int], f: tuple[int, int]) -> bool:
    (u, v), (x, y) = e, f
    return d[u, x] + d[v, y] != d[u, y] + d[v, x]


def partial_cube(g: Skeleton, d: np.ndarray | None = None) -> PartialCubeResult:
    if g.n == 0:
        return PartialCubeResult(None, "empty graph")
    if two_coloring(g) is None:
        return PartialCubeResult(None, "not bipartite")
    if d is None:
        d = apsp(g)
    d = np.asarray(d, dtype=np.int64)
    if (d == UNREACHABLE).any():
        return PartialCubeResult(None, "not connected")
    edges = g.edges()
    eu = np.array([u for u, _ in edges])
    ev = np.array([v for _, v in edges])

    cut_index: dict[bytes, int] = {}
    cuts: list[np.ndarray] = []
    edge_cut = []
    for u, v in edges:
        side = d[:, u] < d[:, v]  # W_uv
        if side[0]:
            side = ~side  # canonical side: the one without vertex 0
        key = np.packbits(side).tobytes()
        if key not in cut_index:
            cut_index[key] = len(cuts)
            cuts.append(side)
        edge_cut.append(cut_index[key])
    edge_cut = np.array(edge_cut)

    for c, side in enumerate(cuts):
        crossing = side[eu] != side[ev]
        others = np.flatnonzero(crossing & (edge_cut != c))
        if len(others):
            e = edges[int(np.flatnonzero(edge_cut == c)[0])]
            f = edges[int(others[0])]
            return PartialCubeResult(None, f"Θ is not transitive: edge {f} crosses the cut of edge {e}")

    labels = np.stack(cuts, axis=1).astype(np.uint8)
    emb = Embedding(1, labels)
    check = verify(g, emb, d=d)
    if not check:
        return PartialCubeResult(None, f"cut labelling is not isometric at {check.witness}")
    classes = tuple(tuple(edges[i] for i in np.flatnonzero(edge_cut == c)) for c in range(len(cuts)))
    return PartialCubeResult(emb, None, classes)
