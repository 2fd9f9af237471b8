"""Exact dense linear algebra over the prime field F_p.

Everything is deterministic: elimination always picks the leftmost nonzero
pivot, so representative choices made downstream are stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._kernels import rref


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _check_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    return p


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int64)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class FpVector:
    p: int
    entries: np.ndarray

    def __post_init__(self):
        _check_prime(self.p)
        e = np.atleast_1d(np.asarray(self.entries, dtype=np.int64)) % self.p
        object.__setattr__(self, "entries", _freeze(e))

    def __len__(self) -> int:
        return self.entries.shape[0]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FpVector)
            and self.p == other.p
            and self.entries.shape == other.entries.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __hash__(self):
        return hash((self.p, self.entries.tobytes()))

    def is_zero(self) -> bool:
        return not self.entries.any()


@dataclass(frozen=True)
class FpMatrix:
    p: int
    entries: np.ndarray

    def __post_init__(self):
        _check_prime(self.p)
        e = np.asarray(self.entries, dtype=np.int64)
        if e.ndim != 2:
            raise ValueError("matrix entries must be two-dimensional")
        object.__setattr__(self, "entries", _freeze(e % self.p))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @classmethod
    def identity(cls, p: int, n: int) -> "FpMatrix":
        return cls(p, np.eye(n, dtype=np.int64))

    @classmethod
    def zero(cls, p: int, rows: int, cols: int) -> "FpMatrix":
        return cls(p, np.zeros((rows, cols), dtype=np.int64))

    def matvec(self, v: FpVector) -> FpVector:
        if v.p != self.p:
            raise ValueError("modulus mismatch")
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return FpVector(self.p, (self.entries @ v.entries) % self.p)


class Solver:
    """Precomputed elimination of a fixed matrix for many right-hand sides.

    Row-reduces [A | I] once; solve(b) is then a single mat-vec plus a
    consistency check.  Solutions set all free variables to zero, matching
    plain Gaussian elimination with leftmost pivots.
    """

    def __init__(self, a: np.ndarray, p: int):
        a = np.asarray(a, dtype=np.int64) % p
        self.p = p
        self.rows, self.cols = a.shape
        aug = np.concatenate([a, np.eye(self.rows, dtype=np.int64)], axis=1)
        red, pivots = rref(aug, p)
        # pivots landing in the identity block are rank deficiencies of A
        self.pivots = pivots[pivots < self.cols]
        self.rank = len(self.pivots)
        self.transform = red[:, self.cols :]
        self.reduced = red[:, : self.cols]

    def solve(self, b: np.ndarray) -> np.ndarray | None:
        """A solution x of A x = b, or None if the system is inconsistent."""
        b = np.asarray(b, dtype=np.int64) % self.p
        if b.shape != (self.rows,):
            raise ValueError("dimension mismatch")
        y = (self.transform @ b) % self.p
        if y[self.rank :].any():
            return None
        x = np.zeros(self.cols, dtype=np.int64)
        x[self.pivots] = y[: self.rank]
        return x

    def solve_many(self, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Solve A x = b for each column of `b`.

        Returns (solutions, ok) where solutions has one column per rhs and
        ok flags consistent systems.
        """
        b = np.asarray(b, dtype=np.int64) % self.p
        # float matmul is exact here (entries < p, sums far below 2^53) and
        # hits BLAS, which matters for large batches
        y = np.rint(self.transform.astype(np.float64) @ b.astype(np.float64))
        y = y.astype(np.int64) % self.p
        ok = ~y[self.rank :].any(axis=0) if self.rank < self.rows else np.ones(b.shape[1], bool)
        x = np.zeros((self.cols, b.shape[1]), dtype=np.int64)
        x[self.pivots] = y[: self.rank]
        return x, ok


def solve_linear(a: FpMatrix, b: FpVector) -> FpVector | None:
    """Some x with A x = b (deterministic), or None if inconsistent."""
    if a.p != b.p:
        raise ValueError("modulus mismatch")
    if len(b) != a.rows:
        raise ValueError("dimension mismatch")
    x = Solver(a.entries, a.p).solve(b.entries)
    return None if x is None else FpVector(a.p, x)


def kernel_basis(a: FpMatrix) -> list[FpVector]:
    """Echelonized basis of the null space of A (empty for injective A)."""
    red, pivots = rref(a.entries, a.p)
    p = a.p
    free = [c for c in range(a.cols) if c not in set(pivots.tolist())]
    basis = []
    for f in free:
        v = np.zeros(a.cols, dtype=np.int64)
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = (-red[r, f]) % p
        basis.append(FpVector(p, v))
    return basis


def membership(v: FpVector, basis: list[FpVector]) -> FpVector | None:
    """Coordinates of v in span(basis), or None if v is outside the span."""
    if not basis:
        if v.is_zero():
            return FpVector(v.p, np.zeros(0, dtype=np.int64))
        return None
    if any(b.p != v.p for b in basis):
        raise ValueError("modulus mismatch")
    if any(len(b) != len(v) for b in basis):
        raise ValueError("dimension mismatch")
    cols = np.stack([b.entries for b in basis], axis=1)
    x = Solver(cols, v.p).solve(v.entries)
    return None if x is None else FpVector(v.p, x)


def row_space_basis(rows: np.ndarray, p: int) -> np.ndarray:
    """RREF basis (as stacked rows) of the span of the given row vectors."""
    rows = np.asarray(rows, dtype=np.int64)
    if rows.size == 0:
        return rows.reshape(0, rows.shape[-1] if rows.ndim == 2 else 0)
    red, pivots = rref(rows, p)
    return red[: len(pivots)]


def in_row_space(v: np.ndarray, basis: np.ndarray, p: int) -> bool:
    if basis.shape[0] == 0:
        return not (np.asarray(v) % p).any()
    stacked = np.concatenate([basis, np.asarray(v, dtype=np.int64).reshape(1, -1) % p])
    return row_space_basis(stacked, p).shape[0] == basis.shape[0]


def row_spaces_equal(a: np.ndarray, b: np.ndarray, p: int) -> bool:
    ba = row_space_basis(a, p)
    bb = row_space_basis(b, p)
    return ba.shape == bb.shape and bool(np.array_equal(ba, bb))
