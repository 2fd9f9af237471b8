"""The cochain algebra C*(G, Z/p) in degrees 0..3.

Convention: inhomogeneous (bar) cochains with trivial action, differential

    (d f)(g)       = 0                                   for f of degree 0
    (d f)(g, h)    = f(g) + f(h) - f(gh)
    (d c)(g, h, k) = c(h, k) - c(gh, k) + c(g, hk) - c(g, h)

and cup product by front/back splitting, (a u b)(g, ..., h, ...) =
a(front) b(back).  Cochains are not required to be normalized.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fp_linalg import Solver, _check_prime, _freeze, row_space_basis, rref
from .group_core import Character, FiniteGroup, Subgroup

MAX_DEGREE = 3


@dataclass(frozen=True)
class Cochain:
    group: FiniteGroup
    p: int
    degree: int
    values: np.ndarray

    def __post_init__(self):
        _check_prime(self.p)
        if not 0 <= self.degree <= MAX_DEGREE:
            raise ValueError(f"degree {self.degree} out of range")
        n = self.group.order
        v = np.asarray(self.values, dtype=np.int64) % self.p
        if v.shape != (n,) * self.degree:
            raise ValueError("value table has wrong shape")
        object.__setattr__(self, "values", _freeze(v))

    @classmethod
    def zero(cls, group: FiniteGroup, p: int, degree: int) -> "Cochain":
        return cls(group, p, degree, np.zeros((group.order,) * degree, dtype=np.int64))

    @classmethod
    def from_character(cls, chi: Character) -> "Cochain":
        return cls(chi.group, chi.p, 1, chi.values)

    def flat(self) -> np.ndarray:
        return self.values.reshape(-1)

    def is_zero(self) -> bool:
        return not self.values.any()

    def __add__(self, other: "Cochain") -> "Cochain":
        self._compat(other)
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Cochain(self.group, self.p, self.degree, self.values + other.values)

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._compat(other)
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Cochain(self.group, self.p, self.degree, self.values - other.values)

    def __neg__(self) -> "Cochain":
        return Cochain(self.group, self.p, self.degree, -self.values)

    def scale(self, t: int) -> "Cochain":
        return Cochain(self.group, self.p, self.degree, self.values * (t % self.p))

    def _compat(self, other: "Cochain"):
        if self.group is not other.group or self.p != other.p:
            raise ValueError("cochains on different groups or moduli")

    def __eq__(self, other):
        return (
            isinstance(other, Cochain)
            and self.group is other.group
            and self.p == other.p
            and self.degree == other.degree
            and bool(np.array_equal(self.values, other.values))
        )

    def __hash__(self):
        return hash((id(self.group), self.p, self.degree, self.values.tobytes()))


def differential(c: Cochain) -> Cochain:
    """The bar differential; raises on degree-3 input."""
    g = c.group
    mul = g.mul
    v = c.values
    p = c.p
    if c.degree == 0:
        out = np.zeros(g.order, dtype=np.int64)
    elif c.degree == 1:
        out = v[:, None] + v[None, :] - v[mul]
    elif c.degree == 2:
        out = v[None, :, :] - v[mul, :] + v[:, mul] - v[:, :, None]
    else:
        raise ValueError("differential undefined in degree 3 (cap)")
    return Cochain(g, p, c.degree + 1, out)


def cup(a: Cochain, b: Cochain) -> Cochain:
    """Cup product by front/back splitting; total degree must stay <= 3."""
    a._compat(b)
    if a.degree + b.degree > MAX_DEGREE:
        raise ValueError("total degree exceeds cap")
    vals = np.multiply.outer(a.values, b.values)
    return Cochain(a.group, a.p, a.degree + b.degree, vals)


def restrict(c: Cochain, sub: Subgroup) -> Cochain:
    """The value table restricted to tuples from the subgroup."""
    if sub.parent is not c.group:
        raise ValueError("subgroup of a different group")
    k, emb = sub.as_group()
    if c.degree == 0:
        vals = c.values
    else:
        vals = c.values[np.ix_(*([emb] * c.degree))]
    return Cochain(k, c.p, c.degree, vals)


def coboundary_matrix(group: FiniteGroup, p: int, degree: int) -> np.ndarray:
    """Matrix of d: C^degree -> C^(degree+1) on flattened value tables."""
    n = group.order
    mul = group.mul
    if degree == 0:
        return np.zeros((n, 1), dtype=np.int64)
    if degree == 1:
        m = np.zeros((n * n, n), dtype=np.int64)
        rows = np.arange(n * n)
        g, h = np.divmod(rows, n)
        np.add.at(m, (rows, g), 1)
        np.add.at(m, (rows, h), 1)
        np.add.at(m, (rows, mul[g, h]), -1)
        return m % p
    if degree == 2:
        m = np.zeros((n**3, n * n), dtype=np.int64)
        rows = np.arange(n**3)
        gh, k = np.divmod(rows, n)
        g, h = np.divmod(gh, n)
        np.add.at(m, (rows, h * n + k), 1)
        np.add.at(m, (rows, mul[g, h] * n + k), -1)
        np.add.at(m, (rows, g * n + mul[h, k]), 1)
        np.add.at(m, (rows, g * n + h), -1)
        return m % p
    raise ValueError("coboundary matrix only built for degrees 0..2")


@dataclass
class CohomologyBasis:
    """H^degree data: representative cocycles, the coboundary space, and a
    precomputed solver giving coordinates of any cocycle in the basis."""

    degree: int
    representatives: list[Cochain]
    coboundaries: np.ndarray  # basis rows of B^degree (flattened)
    _solver: Solver | None
    p: int

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def coordinates(self, z: Cochain) -> np.ndarray:
        """Coordinates of [z]; raises if z is not a cocycle."""
        if z.degree != self.degree:
            raise ValueError("degree mismatch")
        if not differential(z).is_zero():
            raise ValueError("not a cocycle")
        return self.coordinates_unchecked(z.flat())

    def coordinates_unchecked(self, flat: np.ndarray) -> np.ndarray:
        if self._solver is None:
            return np.zeros(0, dtype=np.int64)
        x = self._solver.solve(flat)
        if x is None:  # cannot happen for a true cocycle: the basis spans Z
            raise ValueError("vector outside the cocycle space")
        return x[: self.dim]

    def coordinates_batch(self, flats: np.ndarray) -> np.ndarray:
        """Coordinates for many flattened cocycles (one per column)."""
        if self._solver is None:
            return np.zeros((0, flats.shape[1]), dtype=np.int64)
        x, ok = self._solver.solve_many(flats)
        if not ok.all():
            raise ValueError("vector outside the cocycle space")
        return x[: self.dim]


class CohomologyRing:
    """Cached cohomology data of one (group, p) pair, degrees 1 and 2."""

    def __init__(self, group: FiniteGroup, p: int):
        _check_prime(p)
        self.group = group
        self.p = p
        self._d: dict[int, np.ndarray] = {}
        self._basis: dict[int, CohomologyBasis] = {}
        self._d1_solver: Solver | None = None

    def d_matrix(self, degree: int) -> np.ndarray:
        if degree not in self._d:
            self._d[degree] = coboundary_matrix(self.group, self.p, degree)
        return self._d[degree]

    def d1_solver(self) -> Solver:
        """Solver for d c = (given 2-cochain), c of degree 1."""
        if self._d1_solver is None:
            self._d1_solver = Solver(self.d_matrix(1), self.p)
        return self._d1_solver

    def basis(self, degree: int) -> CohomologyBasis:
        if degree not in self._basis:
            if degree not in (1, 2):
                raise ValueError("cohomology computed in degrees 1 and 2 only")
            self._basis[degree] = self._compute(degree)
        return self._basis[degree]

    def _compute(self, degree: int) -> CohomologyBasis:
        g, p = self.group, self.p
        n = g.order
        d_here = self.d_matrix(degree)
        red, pivots = rref(d_here, p)
        pivset = set(pivots.tolist())
        cols = n**degree
        # kernel basis of d^degree = Z^degree
        z_basis = []
        for f in range(cols):
            if f in pivset:
                continue
            v = np.zeros(cols, dtype=np.int64)
            v[f] = 1
            for r, c in enumerate(pivots):
                v[c] = (-red[r, f]) % p
            z_basis.append(v)
        # B^degree = column space of d^(degree-1), as echelon rows
        d_prev = self.d_matrix(degree - 1)
        b_rows = row_space_basis(d_prev.T, p)
        # extend B to Z: cocycles whose classes are independent
        reps: list[np.ndarray] = []
        span = b_rows
        for v in z_basis:
            cand = np.concatenate([span, v.reshape(1, -1)])
            new = row_space_basis(cand, p)
            if new.shape[0] > span.shape[0]:
                reps.append(v)
                span = new
        rep_cochains = [
            Cochain(g, p, degree, v.reshape((n,) * degree)) for v in reps
        ]
        spanning = reps + [row for row in b_rows]
        solver = Solver(np.stack(spanning, axis=1), p) if spanning else None
        return CohomologyBasis(degree, rep_cochains, b_rows, solver, p)

    # convenience views -----------------------------------------------------

    def h1_characters(self) -> list[Character]:
        return [
            Character(self.group, self.p, c.values)
            for c in self.basis(1).representatives
        ]

    def character_from_coords(self, coords: np.ndarray) -> Character:
        reps = self.basis(1).representatives
        vals = np.zeros(self.group.order, dtype=np.int64)
        for t, c in zip(coords, reps):
            vals = (vals + int(t) * c.values) % self.p
        return Character(self.group, self.p, vals)

    def cup_class(self, a: Character, b: Character) -> np.ndarray:
        z = cup(Cochain.from_character(a), Cochain.from_character(b))
        return self.basis(2).coordinates(z)


_ring_cache: dict[tuple[int, int], CohomologyRing] = {}


def get_ring(group: FiniteGroup, p: int) -> CohomologyRing:
    key = (id(group), p)
    ring = _ring_cache.get(key)
    if ring is None or ring.group is not group:
        ring = CohomologyRing(group, p)
        _ring_cache[key] = ring
    return ring


def cohomology(group: FiniteGroup, p: int, degree: int) -> CohomologyBasis:
    """Basis of H^degree(G, Z/p) with deterministic representatives."""
    return get_ring(group, p).basis(degree)


def class_coordinates(z: Cochain, basis: CohomologyBasis) -> np.ndarray:
    """Coordinates of the class [z] in the given basis (zero for coboundaries)."""
    return basis.coordinates(z)
