"""Triple Massey products: defining systems, the coset structure formula,
and the vanishing-property scanner.

A defining system of size n is a triangular array (c_ij) of 1-cochains,
(1,n) absent, with d c_ij = ctilde_ij := -sum_r c_ir u c_(r+1)j.  The triple
product is computed from ONE deterministic defining system plus the coset
formula; exhaustive enumeration over all defining systems is provided as an
independent cross-check (exponential, test use).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .cochain_dga import Cochain, CohomologyRing, cup, differential, get_ring
from .fp_linalg import in_row_space, row_space_basis
from .group_core import Character, FiniteGroup


@dataclass
class DefiningSystem:
    """Partial triangular array of 1-cochains realizing a Massey product."""

    n: int
    entries: dict[tuple[int, int], Cochain]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("size must be at least 2")
        for (i, j) in self.entries:
            if not (1 <= i <= j <= self.n) or (i, j) == (1, self.n):
                raise ValueError(f"illegal entry position {(i, j)}")
            if self.entries[(i, j)].degree != 1:
                raise ValueError("entries must be 1-cochains")

    def entry(self, i: int, j: int) -> Cochain:
        try:
            return self.entries[(i, j)]
        except KeyError:
            raise ValueError(f"missing entry {(i, j)}") from None

    def is_valid(self) -> bool:
        """Check d c_ij = ctilde_ij for every stored position."""
        for (i, j) in self.entries:
            if differential(self.entry(i, j)) != tilde(self, i, j):
                return False
        return True


def tilde(ds: DefiningSystem, i: int, j: int) -> Cochain:
    """The 2-cochain ctilde_ij = -sum_{r=i}^{j-1} c_ir u c_(r+1)j."""
    if not (1 <= i <= j <= ds.n):
        raise ValueError(f"position {(i, j)} out of range")
    some = ds.entry(i, i)
    acc = Cochain.zero(some.group, some.p, 2)
    for r in range(i, j):
        acc = acc + cup(ds.entry(i, r), ds.entry(r + 1, j))
    return -acc


@dataclass
class MasseyCoset:
    """A triple Massey product: representative class + indeterminacy space,
    both in H^2 coordinates."""

    representative: np.ndarray
    indeterminacy: np.ndarray  # basis rows
    p: int

    def elements(self) -> list[tuple[int, ...]]:
        """All classes in the coset (small dimensions only)."""
        out = []
        k = self.indeterminacy.shape[0]
        for coeffs in itertools.product(range(self.p), repeat=k):
            v = self.representative.copy()
            for t, row in zip(coeffs, self.indeterminacy):
                v = (v + t * row) % self.p
            out.append(tuple(int(x) for x in v))
        return sorted(set(out))


def _solve_d1(ring: CohomologyRing, rhs: Cochain) -> Cochain | None:
    x = ring.d1_solver().solve(rhs.flat())
    if x is None:
        return None
    return Cochain(ring.group, ring.p, 1, x)


def find_triple_defining_system(
    chi1: Character, chi2: Character, chi3: Character
) -> DefiningSystem | None:
    """A deterministic defining system on (chi1, chi2, chi3), or None when
    one of the cup classes [chi1][chi2], [chi2][chi3] is nonzero."""
    g, p = _common(chi1, chi2, chi3)
    ring = get_ring(g, p)
    c1, c2, c3 = (Cochain.from_character(c) for c in (chi1, chi2, chi3))
    c12 = _solve_d1(ring, -cup(c1, c2))
    if c12 is None:
        return None
    c23 = _solve_d1(ring, -cup(c2, c3))
    if c23 is None:
        return None
    return DefiningSystem(
        3, {(1, 1): c1, (2, 2): c2, (3, 3): c3, (1, 2): c12, (2, 3): c23}
    )


def indeterminacy_subspace(
    ring: CohomologyRing, chi1: Character, chi3: Character
) -> np.ndarray:
    """Echelon basis rows of chi1 u H^1 + chi3 u H^1 in H^2 coordinates."""
    h2 = ring.basis(2)
    rows = []
    c1 = Cochain.from_character(chi1)
    c3 = Cochain.from_character(chi3)
    for phi in ring.basis(1).representatives:
        rows.append(h2.coordinates(cup(c1, phi)))
        rows.append(h2.coordinates(cup(c3, phi)))
    if not rows:
        return np.zeros((0, h2.dim), dtype=np.int64)
    return row_space_basis(np.stack(rows), ring.p)


def triple_massey_set(
    chi1: Character, chi2: Character, chi3: Character
) -> MasseyCoset | None:
    """The triple Massey product as a coset, or None when undefined."""
    g, p = _common(chi1, chi2, chi3)
    ring = get_ring(g, p)
    ds = find_triple_defining_system(chi1, chi2, chi3)
    if ds is None:
        return None
    rep = ring.basis(2).coordinates(tilde(ds, 1, 3))
    return MasseyCoset(rep, indeterminacy_subspace(ring, chi1, chi3), p)


def contains_zero(coset: MasseyCoset) -> bool:
    """True iff the representative lies in the indeterminacy subspace."""
    return in_row_space(coset.representative, coset.indeterminacy, coset.p)


def enumerate_triple_classes(
    chi1: Character, chi2: Character, chi3: Character
) -> set[tuple[int, ...]] | None:
    """The set of classes [ctilde_13] over ALL defining systems, by direct
    enumeration of every interior-entry choice.  Exponential; cross-check
    oracle for the coset formula."""
    g, p = _common(chi1, chi2, chi3)
    ring = get_ring(g, p)
    ds = find_triple_defining_system(chi1, chi2, chi3)
    if ds is None:
        return None
    h1 = ring.basis(1)
    h2 = ring.basis(2)
    n = g.order
    d = h1.dim
    # every valid interior entry = deterministic solution + element of Z^1,
    # and Z^1 = span of the H^1 representatives (B^1 = 0)
    z1 = (
        np.stack([c.flat() for c in h1.representatives])
        if d
        else np.zeros((0, n), dtype=np.int64)
    )
    coeffs = np.asarray(list(itertools.product(range(p), repeat=d)), dtype=np.int64)
    u12 = (ds.entry(1, 2).flat()[None, :] + coeffs @ z1) % p
    u23 = (ds.entry(2, 3).flat()[None, :] + coeffs @ z1) % p

    v1 = chi1.values
    v3 = chi3.values
    # flattened tables of chi1 u c23 (per variant) and c12 u chi3 (per variant)
    x = (v1[None, :, None] * u23[:, None, :]).reshape(len(u23), n * n) % p
    y = (u12[:, :, None] * v3[None, None, :]).reshape(len(u12), n * n) % p

    out: set[tuple[int, ...]] = set()
    chunk = max(1, (1 << 22) // (len(u23) * n * n))
    for s in range(0, len(u12), chunk):
        blk = y[s : s + chunk]
        flats = (-(x[None, :, :] + blk[:, None, :])) % p
        coords = h2.coordinates_batch(flats.reshape(-1, n * n).T)
        out.update(map(tuple, coords.T.tolist()))
    return out


@dataclass
class ScanEntry:
    triple: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    defined: bool
    contains_zero: bool


@dataclass
class ScanReport:
    group: FiniteGroup
    p: int
    entries: list[ScanEntry] = field(default_factory=list)

    @property
    def witnesses(self) -> list[ScanEntry]:
        return [e for e in self.entries if e.defined and not e.contains_zero]

    @property
    def holds(self) -> bool:
        return not self.witnesses


def scan_vanishing(group: FiniteGroup, p: int, jobs: int = 1) -> ScanReport:
    """Check the vanishing triple Massey product property by iterating all
    ordered triples of H^1 elements (zero and repeats included).

    With jobs > 1 the (independent, read-only) triple computations run on a
    thread pool; results are merged in triple order either way.
    """
    ring = get_ring(group, p)
    h1 = ring.basis(1)
    h2 = ring.basis(2)
    ring.d1_solver()  # prebuild shared caches before any parallel phase
    d = h1.dim
    coords = [tuple(t) for t in itertools.product(range(p), repeat=d)]
    chars = [ring.character_from_coords(np.asarray(c, dtype=np.int64)) for c in coords]

    # pairwise cup classes, batched
    m = len(chars)
    flats = np.stack(
        [
            np.multiply.outer(chars[i].values, chars[j].values).reshape(-1) % p
            for i in range(m)
            for j in range(m)
        ],
        axis=1,
    )
    cc = h2.coordinates_batch(flats)
    cup_zero = ~cc.any(axis=0) if h2.dim else np.ones(m * m, dtype=bool)

    triples = list(itertools.product(range(m), repeat=3))
    subspaces: dict[tuple[int, int], np.ndarray] = {}
    for i, j, k in triples:
        if cup_zero[i * m + j] and cup_zero[j * m + k] and (i, k) not in subspaces:
            subspaces[(i, k)] = indeterminacy_subspace(ring, chars[i], chars[k])

    def entry_for(t: tuple[int, int, int]) -> ScanEntry:
        i, j, k = t
        defined = bool(cup_zero[i * m + j]) and bool(cup_zero[j * m + k])
        cz = False
        if defined:
            ds = find_triple_defining_system(chars[i], chars[j], chars[k])
            rep = h2.coordinates(tilde(ds, 1, 3))
            cz = in_row_space(rep, subspaces[(i, k)], p)
        return ScanEntry((coords[i], coords[j], coords[k]), defined, cz)

    report = ScanReport(group, p)
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            report.entries = list(pool.map(entry_for, triples, chunksize=64))
    else:
        report.entries = [entry_for(t) for t in triples]
    return report


def _common(*chars: Character) -> tuple[FiniteGroup, int]:
    g, p = chars[0].group, chars[0].p
    if any(c.group is not g or c.p != p for c in chars):
        raise ValueError("characters on different groups or moduli")
    return g, p
