"""Scale embeddings into hypercubes and their verification."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..metrics import UNREACHABLE, apsp
from ..skeletons.core import Skeleton


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Embedding:
    """Scale ``scale`` embedding; ``labels`` is an ``n x dim`` 0/1 array."""

    scale: int
    labels: np.ndarray

    def __post_init__(self):
        lab = np.asarray(self.labels, dtype=np.uint8)
        if lab.ndim != 2:
            raise EmbeddingError("labels must be a 2-d array")
        if lab.size and lab.max() > 1:
            raise EmbeddingError("labels must be binary")
        if self.scale < 1:
            raise EmbeddingError("scale must be a positive integer")
        lab.setflags(write=False)
        object.__setattr__(self, "labels", lab)

    @property
    def n(self) -> int:
        return self.labels.shape[0]

    @property
    def dim(self) -> int:
        return self.labels.shape[1]

    def normalized(self) -> "Embedding":
        """Translate so vertex 0 gets the zero label."""
        if self.n == 0:
            return self
        return Embedding(self.scale, self.labels ^ self.labels[0])

    def target(self) -> str:
        """``H_m`` or ``½H_m`` (scale 2, even-weight labels after translation)."""
        if self.scale == 1:
            return f"H_{self.dim}"
        if self.scale == 2 and not (self.normalized().labels.sum(axis=1) % 2).any():
            return f"½H_{self.dim}"
        return f"H_{self.dim} (scale {self.scale})"

    def label_strings(self) -> list[str]:
        return ["".join("1" if x else "0" for x in row) for row in self.labels]

    def to_dict(self) -> dict:
        return {"scale": self.scale, "dim": self.dim, "labels": self.label_strings()}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @staticmethod
    def from_labels(scale: int, labels: Sequence[str | Sequence[int]], dim: int | None = None) -> "Embedding":
        rows = [[int(c) for c in row] for row in labels]
        if dim is None:
            dim = len(rows[0]) if rows else 0
        if any(len(r) != dim for r in rows):
            raise EmbeddingError("labels have inconsistent lengths")
        return Embedding(scale, np.array(rows, dtype=np.uint8).reshape(len(rows), dim))

    @staticmethod
    def from_ints(scale: int, words: Sequence[int], dim: int) -> "Embedding":
        """Bit ``k`` of ``words[v]`` is coordinate ``k`` of vertex ``v``."""
        arr = np.array([[(w >> k) & 1 for k in range(dim)] for w in words], dtype=np.uint8)
        return Embedding(scale, arr.reshape(len(words), dim))

    @staticmethod
    def from_dict(d: dict) -> "Embedding":
        emb = Embedding.from_labels(int(d["scale"]), d["labels"], d.get("dim"))
        if "dim" in d and emb.dim != d["dim"]:
            raise EmbeddingError("'dim' does not match the label length")
        return emb

    @staticmethod
    def from_json(text: str) -> "Embedding":
        return Embedding.from_dict(json.loads(text))


@dataclass(frozen=True)
class VerifyResult:
    valid: bool
    witness: tuple[int, int, int, int] | None = None  # (u, v, scale*d, hamming)
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.valid

    def to_dict(self) -> dict:
        d = {"valid": self.valid}
        if self.witness is not None:
            u, v, want, got = self.witness
            d["witness"] = {"u": u, "v": v, "scaled_distance": want, "hamming": got}
        if self.reason:
            d["reason"] = self.reason
        return d


def hamming_block(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = a.astype(np.int32)
    b = b.astype(np.int32)
    return a @ (1 - b).T + (1 - a) @ b.T


def verify(g: Skeleton, emb: Embedding, restrict_to_core: bool = False,
           d: np.ndarray | None = None, block: int = 512) -> VerifyResult:
    """Check ``scale * d_G(u,v) == hamming(label u, label v)`` for all (core) pairs.

    The first failing pair in row-major order is returned as the witness.
    """
    if emb.n != g.n:
        raise EmbeddingError(f"embedding has {emb.n} labels for {g.n} vertices")
    verts = np.array(g.core_vertices() if restrict_to_core else range(g.n), dtype=np.int64)
    lab = emb.labels[verts]
    for start in range(0, len(verts), block):
        rows = verts[start:start + block]
        if d is None:
            drow = apsp(g, rows)[:, verts].astype(np.int64)
        else:
            drow = np.asarray(d)[np.ix_(rows, verts)].astype(np.int64)
        if (drow == UNREACHABLE).any():
            return VerifyResult(False, reason="graph is disconnected on the checked vertices")
        ham = hamming_block(lab[start:start + block], lab)
        bad = np.argwhere(emb.scale * drow != ham)
        if len(bad):
            i, j = bad[0]
            u, v = int(rows[i]), int(verts[j])
            return VerifyResult(False, (u, v, int(emb.scale * drow[i, j]), int(ham[i, j])))
    return VerifyResult(True)


def equivalent(e1: Embedding, e2: Embedding) -> bool:
    """Equal up to translation, per-coordinate complementation and coordinate permutation."""
    if e1.scale != e2.scale or e1.n != e2.n:
        return False

    def canon(e):
        lab = e.normalized().labels
        cols = [tuple(col) for col in lab.T if col.any()]
        return sorted(cols)

    return canon(e1) == canon(e2)


def concatenate(*embs: Embedding) -> Embedding:
    """Labels side by side; scales must agree (use ``rescaled`` first)."""
    scales = {e.scale for e in embs}
    if len(scales) != 1:
        raise EmbeddingError(f"cannot concatenate scales {sorted(scales)}")
    return Embedding(scales.pop(), np.hstack([e.labels for e in embs]))


def rescaled(e: Embedding, factor: int) -> Embedding:
    """Repeat every coordinate ``factor`` times (scale multiplies)."""
    return Embedding(e.scale * factor, np.repeat(e.labels, factor, axis=1))


@dataclass(frozen=True)
class CutDecomposition:
    """Multiset of cuts: ``sum mult_S * delta_S = scale * d``.

    Each cut is stored as its side containing vertex 0 (sorted), so a cut
    and its complement are never both present.  In the induced labelling
    vertices outside the stored side get bit 1.
    """

    scale: int
    cuts: tuple[tuple[tuple[int, ...], int], ...]
    n: int

    @property
    def dim(self) -> int:
        return sum(m for _, m in self.cuts)

    def to_embedding(self) -> Embedding:
        cols = []
        for side, mult in self.cuts:
            col = np.ones(self.n, dtype=np.uint8)
            col[list(side)] = 0
            cols.extend([col] * mult)
        labels = np.stack(cols, axis=1) if cols else np.zeros((self.n, 0), dtype=np.uint8)
        return Embedding(self.scale, labels)

    def to_dict(self) -> dict:
        return {"scale": self.scale, "n": self.n,
                "cuts": [{"side": list(side), "mult": m} for side, m in self.cuts]}

    @staticmethod
    def from_dict(d: dict) -> "CutDecomposition":
        return CutDecomposition(int(d["scale"]),
                                tuple((tuple(c["side"]), int(c["mult"])) for c in d["cuts"]), int(d["n"]))

    @staticmethod
    def from_embedding(emb: Embedding) -> "CutDecomposition":
        """Group equal (or complementary) coordinate columns into weighted cuts."""
        counts: dict[tuple[int, ...], int] = {}
        lab = emb.normalized().labels
        for col in lab.T:
            side = tuple(int(v) for v in np.flatnonzero(col == 0))
            if len(side) < emb.n:
                counts[side] = counts.get(side, 0) + 1
        return CutDecomposition(emb.scale, tuple(sorted(counts.items())), emb.n)
