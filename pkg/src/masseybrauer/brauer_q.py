"""Exact 2-torsion local arithmetic over Q: Hilbert symbols, local
invariants of sums of quaternion symbols, and multiquadratic splitting.

A class is a formal sum of symbols (a, b) with nonzero integer entries; it
is identified with its finite table of local invariants (values in {0, 1/2}),
which determines it globally by Albert-Brauer-Hasse-Noether injectivity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

HALF = Fraction(1, 2)

DEFAULT_FACTOR_BOUND = 10**6


class FactorBoundExceeded(ValueError):
    """Trial division hit the configured bound without finishing."""


@dataclass(frozen=True, order=True)
class Place:
    """A place of Q: the real place or a finite prime."""

    # sort key: real place first, then primes in order
    finite: bool
    q: int  # 0 for the real place

    def __post_init__(self):
        if self.finite:
            if not _is_prime(self.q):
                raise ValueError(f"{self.q} is not prime")
        elif self.q != 0:
            raise ValueError("the real place carries no prime")

    @classmethod
    def real(cls) -> "Place":
        return cls(False, 0)

    @classmethod
    def prime(cls, q: int) -> "Place":
        return cls(True, q)

    def __str__(self):
        return "inf" if not self.finite else str(self.q)

    @classmethod
    def parse(cls, text: str) -> "Place":
        if text in ("inf", "oo", "real"):
            return cls.real()
        return cls.prime(int(text))


REAL = Place.real()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factorize(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> dict[int, int]:
    """Prime factorization of |n| by trial division up to `bound`."""
    if n == 0:
        raise ValueError("zero has no factorization")
    n = abs(n)
    out: dict[int, int] = {}
    d = 2
    while d * d <= n and d <= bound:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        if n > bound * bound:
            raise FactorBoundExceeded(
                f"unfactored part {n} exceeds trial-division bound {bound}"
            )
        out[n] = out.get(n, 0) + 1
    return out


def _val_unit(n: int, q: int) -> tuple[int, int]:
    """(v, u) with n = q^v * u and q does not divide u."""
    v = 0
    while n % q == 0:
        n //= q
        v += 1
    return v, n


def _legendre(u: int, q: int) -> int:
    """Legendre symbol of a unit u mod an odd prime q, as +-1."""
    r = pow(u % q, (q - 1) // 2, q)
    return 1 if r == 1 else -1


def hilbert_symbol(a: int, b: int, place: Place) -> int:
    """The Hilbert symbol (a, b)_v as +-1.

    +1 exactly when z^2 = a x^2 + b y^2 has a nontrivial solution over the
    completion at v; computed by the classical residue formulas.
    """
    if a == 0 or b == 0:
        raise ValueError("symbol entries must be nonzero")
    if not place.finite:
        return -1 if (a < 0 and b < 0) else 1
    q = place.q
    if q == 2:
        alpha, u = _val_unit(a, 2)
        beta, w = _val_unit(b, 2)
        eps_u = ((u - 1) // 2) % 2
        eps_w = ((w - 1) // 2) % 2
        om_u = ((u * u - 1) // 8) % 2
        om_w = ((w * w - 1) // 8) % 2
        e = eps_u * eps_w + alpha * om_w + beta * om_u
        return -1 if e % 2 else 1
    alpha, u = _val_unit(a, q)
    beta, w = _val_unit(b, q)
    s = 1
    if (alpha * beta) % 2 and (q - 1) // 2 % 2:
        s = -s
    if beta % 2:
        s *= _legendre(u, q)
    if alpha % 2:
        s *= _legendre(w, q)
    return s


def is_local_square(a: int, place: Place) -> bool:
    """True iff a is a square in the completion at the place."""
    if a == 0:
        raise ValueError("zero is not a unit of any completion")
    if not place.finite:
        return a > 0
    q = place.q
    v, u = _val_unit(a, q)
    if v % 2:
        return False
    if q == 2:
        return u % 8 == 1
    return _legendre(u, q) == 1


@dataclass(frozen=True)
class QuaternionSymbol:
    a: int
    b: int

    def __post_init__(self):
        if self.a == 0 or self.b == 0:
            raise ValueError("symbol entries must be nonzero")


class BrauerClass2:
    """A 2-torsion Brauer class over Q as a formal sum of quaternion symbols."""

    def __init__(
        self,
        symbols: Iterable[QuaternionSymbol | tuple[int, int]],
        factor_bound: int = DEFAULT_FACTOR_BOUND,
    ):
        syms = []
        for s in symbols:
            if not isinstance(s, QuaternionSymbol):
                s = QuaternionSymbol(int(s[0]), int(s[1]))
            syms.append(s)
        self.symbols: tuple[QuaternionSymbol, ...] = tuple(syms)
        self.factor_bound = factor_bound
        self._invariants: dict[Place, Fraction] | None = None

    def candidate_support(self) -> list[Place]:
        """{infinity, 2} plus the odd primes dividing some symbol entry."""
        primes = {2}
        for s in self.symbols:
            for n in (s.a, s.b):
                primes.update(factorize(n, self.factor_bound))
        return [REAL] + [Place.prime(q) for q in sorted(primes)]

    def local_invariants(self) -> dict[Place, Fraction]:
        """Map from places to nonzero invariants (each 1/2); empty for the
        trivial class."""
        if self._invariants is None:
            inv: dict[Place, Fraction] = {}
            for v in self.candidate_support():
                s = 1
                for sym in self.symbols:
                    s *= hilbert_symbol(sym.a, sym.b, v)
                if s == -1:
                    inv[v] = HALF
            self._invariants = inv
        return dict(self._invariants)

    def support(self) -> list[Place]:
        return sorted(self.local_invariants())

    def is_trivial(self) -> bool:
        return not self.local_invariants()

    def __add__(self, other: "BrauerClass2") -> "BrauerClass2":
        return BrauerClass2(
            self.symbols + other.symbols,
            max(self.factor_bound, other.factor_bound),
        )

    def __repr__(self):
        return f"BrauerClass2({[(s.a, s.b) for s in self.symbols]})"


def local_invariants(c: BrauerClass2) -> dict[Place, Fraction]:
    return c.local_invariants()


def classes_equal(c1: BrauerClass2, c2: BrauerClass2) -> bool:
    """Equality in the Brauer group: all local invariants agree."""
    return c1.local_invariants() == c2.local_invariants()


def splits_in_multiquadratic(c: BrauerClass2, a_list: Iterable[int]) -> bool:
    """True iff the class dies over Q(sqrt(a_1), ..., sqrt(a_r)): at every
    place carrying invariant 1/2, some a_i is a local nonsquare (so every
    completion of the field upstairs has even degree and kills the
    invariant)."""
    a_list = list(a_list)
    if any(a == 0 for a in a_list):
        raise ValueError("square roots of zero not allowed")
    for v in c.support():
        if all(is_local_square(a, v) for a in a_list):
            return False
    return True


def reciprocity_holds(a: int, b: int, factor_bound: int = DEFAULT_FACTOR_BOUND) -> bool:
    """Product of (a,b)_v over the candidate support equals +1."""
    c = BrauerClass2([(a, b)], factor_bound)
    prod = 1
    for v in c.candidate_support():
        prod *= hilbert_symbol(a, b, v)
    return prod == 1
