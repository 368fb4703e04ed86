"""Floating-point Poincaré-disk construction of {p,q} vertex balls.

Test-only oracle: independent of the combinatorial growth in the package.
"""
from __future__ import annotations

import cmath
import math

import numpy as np


def _rot(theta):
    return np.array([[cmath.exp(0.5j * theta), 0], [0, cmath.exp(-0.5j * theta)]])


def _trans(length):
    c, s = math.cosh(length / 2), math.sinh(length / 2)
    return np.array([[c, s], [s, c]], dtype=complex)


def _apply(m, z):
    return (m[0, 0] * z + m[0, 1]) / (m[1, 0] * z + m[1, 1])


def sphere_sizes(p: int, q: int, radius: int) -> list[int]:
    """Number of tiling vertices at each graph distance 0..radius from a vertex."""
    ell = 2 * math.acosh(math.cos(math.pi / p) / math.sin(math.pi / q))
    steps = [_rot(2 * math.pi * k / q) @ _trans(ell) @ _rot(math.pi) for k in range(q)]
    frames = [np.eye(2, dtype=complex)]
    points = [0j]

    def key(z):
        return (round(z.real, 7), round(z.imag, 7))

    seen = {key(0j): 0}
    frontier = [0]
    sizes = [1]
    for _ in range(radius):
        nxt = []
        for v in frontier:
            for st in steps:
                f = frames[v] @ st
                z = _apply(f, 0j)
                k = key(z)
                if k not in seen:
                    seen[k] = len(points)
                    points.append(z)
                    frames.append(f)
                    nxt.append(seen[k])
        sizes.append(len(nxt))
        frontier = nxt
    return sizes
