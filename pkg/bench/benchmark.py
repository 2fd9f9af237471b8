"""Benchmark the numba elimination kernel against the pure-numpy fallback.

Run as:  python3 bench/benchmark.py

Both paths compute identical RREFs; this only measures speed on the matrix
shapes the cohomology engine actually produces (coboundary matrices of the
builtin groups) plus a few synthetic dense matrices.
"""

from __future__ import annotations

import time

import numpy as np

from masseybrauer import _kernels
from masseybrauer.catalog import builtin_group
from masseybrauer.cochain_dga import coboundary_matrix


def _jit_kernel():
    if _kernels._rref_jit is not None:
        return _kernels._rref_jit
    try:
        from numba import njit
    except ImportError:
        return None
    return njit(cache=True)(_kernels._rref_loops)


def _time(fn, repeats: int = 3) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases():
    rng = np.random.default_rng(7)
    for name, p in [("elab:2:3", 2), ("dihedral:8", 2), ("elab:3:3", 3)]:
        g = builtin_group(name)
        yield f"d2 coboundary {name} (p={p})", coboundary_matrix(g, p, 2), p
    for n, p in [(300, 2), (300, 3), (600, 5)]:
        yield f"random {n}x{n} (p={p})", rng.integers(0, p, size=(n, n)), p


def main() -> None:
    jit = _jit_kernel()
    if jit is None:
        print("numba not importable; only the numpy fallback can be timed")
    print(f"{'case':40s} {'numpy':>10s} {'numba':>10s} {'speedup':>8s}")
    for label, mat, p in cases():
        mat = np.ascontiguousarray(mat, dtype=np.int64) % p
        t_np = _time(lambda: _kernels._rref_numpy(mat.copy(), p))
        if jit is not None:
            jit(mat.copy(), p)  # warm the JIT cache
            t_nb = _time(lambda: jit(mat.copy(), p))
            a, b = mat.copy(), mat.copy()
            _kernels._rref_numpy(a, p)
            jit(b, p)
            assert np.array_equal(a, b), f"kernel mismatch on {label}"
            print(f"{label:40s} {t_np:9.4f}s {t_nb:9.4f}s {t_np / t_nb:7.2f}x")
        else:
            print(f"{label:40s} {t_np:9.4f}s {'-':>10s} {'-':>8s}")


if __name__ == "__main__":
    main()
