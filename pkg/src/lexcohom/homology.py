"""Reduced simplicial homology ranks over GF(p).

Complexes are given as collections of faces encoded as vertex bitmasks; the
empty face is mask 0.  Conventions (these matter: an off-by-one here silently
corrupts first syzygies):

* the void complex (no faces at all) has H~_k = 0 for every k;
* the irrelevant complex {emptyset} has H~_{-1} = K and nothing else.
"""

from __future__ import annotations

import numpy as np

from .linalg import rank_mod_p


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def boundary_matrix(lower: list[int], upper: list[int]) -> np.ndarray:
    """Signed boundary matrix from the span of ``upper`` faces to ``lower``."""
    index = {f: i for i, f in enumerate(lower)}
    mat = np.zeros((len(lower), len(upper)), dtype=np.int64)
    for j, f in enumerate(upper):
        sign = 1
        v = f
        while v:
            low = v & (-v)
            sub = f & ~low
            i = index.get(sub)
            if i is not None:
                mat[i, j] = sign
            sign = -sign
            v &= v - 1
    return mat


def reduced_homology_dims(faces, p: int) -> dict[int, int]:
    """Reduced homology dims {k: dim H~_k} of a simplicial complex.

    ``faces`` must be closed under taking subsets (including mask 0 when the
    complex is nonvoid); only nonzero dims are reported.
    """
    faces = set(faces)
    if not faces:
        return {}
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(_popcount(f) - 1, []).append(f)
    for level in by_dim.values():
        level.sort()
    top = max(by_dim)
    ranks: dict[int, int] = {}
    for k in range(0, top + 1):
        lower = by_dim.get(k - 1, [])
        upper = by_dim.get(k, [])
        ranks[k] = rank_mod_p(boundary_matrix(lower, upper), p) if lower and upper else 0
    out = {}
    for k in range(-1, top + 1):
        dim = len(by_dim.get(k, [])) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if dim:
            out[k] = dim
    return out
