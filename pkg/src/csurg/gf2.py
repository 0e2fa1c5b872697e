"""Thin helpers over galois.GF(2) for the chain-complex computations.

Matrices travel through the toolkit as numpy uint8 arrays of 0/1 and are
converted to field arrays only inside these helpers.
"""

from __future__ import annotations

import warnings

import numpy as np

warnings.filterwarnings("ignore", message=".*TBB threading layer.*")
with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    import galois

GF2 = galois.GF(2)


def as_gf2(a) -> np.ndarray:
    return (np.asarray(a, dtype=np.int64) % 2).astype(np.uint8)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.uint8)


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a.astype(np.int64) @ b.astype(np.int64) % 2).astype(np.uint8)


def rank(a) -> int:
    a = as_gf2(a)
    if a.size == 0 or not a.any():
        return 0
    return int(np.linalg.matrix_rank(GF2(a)))


def kernel(a) -> np.ndarray:
    """Columns spanning the null space of a (shape cols x nullity)."""
    a = as_gf2(a)
    rows, cols = a.shape
    if cols == 0:
        return zeros(0, 0)
    if rows == 0 or not a.any():
        return np.eye(cols, dtype=np.uint8)
    ns = GF2(a).null_space()
    return np.asarray(ns, dtype=np.uint8).T.reshape(cols, -1)


def solve(a, b):
    """Some x with a x = b over GF(2), or None when there is none."""
    a = as_gf2(a)
    b = as_gf2(b).reshape(-1)
    rows, cols = a.shape
    if cols == 0:
        return np.zeros(0, dtype=np.uint8) if not b.any() else None
    aug = np.asarray(GF2(np.hstack([a, b.reshape(-1, 1)])).row_reduce(), dtype=np.uint8)
    x = np.zeros(cols, dtype=np.uint8)
    for row in aug:
        nz = np.nonzero(row)[0]
        if nz.size == 0:
            continue
        lead = nz[0]
        if lead == cols:
            return None
        x[lead] = row[cols]
    return x


def homology_dim(d_in: np.ndarray, d_out: np.ndarray, n: int) -> int:
    """dim ker(d_out) - rank(d_in) on a space of dimension n."""
    return n - rank(d_out) - rank(d_in)
