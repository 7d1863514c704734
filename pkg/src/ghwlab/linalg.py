"""Small dense linear algebra over F_p on integer numpy arrays."""

from __future__ import annotations

import numpy as np


def rref(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p; returns (nonzero rows, pivot columns)."""
    a = np.array(a, dtype=np.int64) % p
    if a.ndim != 2:
        raise ValueError("rref expects a matrix")
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if len(nz) == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        others = np.nonzero(a[:, c])[0]
        for i in others:
            if i != r:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(a, p: int) -> int:
    return len(rref(a, p)[1])


def nullspace(a, p: int) -> np.ndarray:
    """Basis (as rows) of {v : a @ v = 0 mod p}."""
    a = np.asarray(a, dtype=np.int64)
    cols = a.shape[1]
    r, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = (-r[row, fc]) % p
    return basis


def complement(basis, p: int, dim: int) -> np.ndarray:
    """Standard basis vectors spanning a complement of the row space of ``basis``."""
    basis = np.asarray(basis, dtype=np.int64).reshape(-1, dim)
    _, pivots = rref(basis, p) if len(basis) else (None, [])
    eye = np.eye(dim, dtype=np.int64)
    return eye[[c for c in range(dim) if c not in pivots]]
