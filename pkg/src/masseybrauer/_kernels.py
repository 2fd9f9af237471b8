"""Dense mod-p elimination kernels.

The hot loop of every cohomology computation is Gaussian elimination of a
coboundary matrix (up to |G|^3 x |G|^2 entries).  The jitted path uses numba;
set MASSEYBRAUER_DISABLE_NUMBA=1 to force the pure-numpy fallback.  Both
paths produce identical output (reduced row echelon form, leftmost-pivot
order), so everything downstream is reproducible either way.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLE = os.environ.get("MASSEYBRAUER_DISABLE_NUMBA", "") not in ("", "0")


def _modinv(a: int, p: int) -> int:
    # p is prime, a nonzero mod p
    return pow(int(a), p - 2, p)


def _rref_numpy(a: np.ndarray, p: int) -> np.ndarray:
    """In-place reduced row echelon form mod p; returns pivot columns."""
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * _modinv(a[r, c], p)) % p
        col = a[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            a[mask] = (a[mask] - np.outer(col[mask], a[r])) % p
        pivots.append(c)
        r += 1
    return np.asarray(pivots, dtype=np.int64)


def _rref_loops(a, p):  # pragma: no cover - compiled
    rows, cols = a.shape
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    npiv = 0
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        # scale pivot row
        inv = 1
        base = a[r, c] % p
        e = p - 2
        while e > 0:
            if e & 1:
                inv = (inv * base) % p
            base = (base * base) % p
            e >>= 1
        for j in range(cols):
            a[r, j] = (a[r, j] * inv) % p
        for i in range(rows):
            if i != r and a[i, c] != 0:
                f = a[i, c]
                for j in range(c, cols):
                    a[i, j] = (a[i, j] - f * a[r, j]) % p
        pivots[npiv] = c
        npiv += 1
        r += 1
    return pivots[:npiv]


_rref_jit = None
if not _DISABLE:
    try:
        from numba import njit

        _rref_jit = njit(cache=True)(_rref_loops)
    except ImportError:  # pragma: no cover
        _rref_jit = None

USING_NUMBA = _rref_jit is not None


def rref_inplace(a: np.ndarray, p: int) -> np.ndarray:
    """Reduce `a` (int64, C-contiguous) to RREF mod p in place.

    Returns the pivot column indices in increasing order.
    """
    if a.dtype != np.int64 or not a.flags.c_contiguous:
        raise ValueError("rref_inplace expects a C-contiguous int64 array")
    if USING_NUMBA:
        return _rref_jit(a, p)
    return _rref_numpy(a, p)


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """RREF mod p of a copy of `a`; returns (reduced matrix, pivot columns)."""
    work = np.ascontiguousarray(a, dtype=np.int64) % p
    if work is a:
        work = work.copy()
    pivots = rref_inplace(work, p)
    return work, pivots
