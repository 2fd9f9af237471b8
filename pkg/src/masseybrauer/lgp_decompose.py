"""Constructive decomposition of 2-torsion Brauer classes over Q split by a
multiquadratic extension: given a class c and a_1..a_r with c dying over
Q(sqrt(a_1), ..., sqrt(a_r)), produce x_1..x_r with c = sum (a_i, x_i),
together with a re-checkable certificate of every pipeline stage.

Pipeline: support of c -> auxiliary place v0 (smallest usable odd prime)
-> entry adjustment a_i vs a_1 a_i -> partition of the support -> per-entry
invariant targets (balanced at v0 so each target has even size) -> exact
realization of each target as a single symbol (a_i, x_i).
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .brauer_q import (
    HALF,
    REAL,
    BrauerClass2,
    Place,
    classes_equal,
    factorize,
    hilbert_symbol,
    is_local_square,
    splits_in_multiquadratic,
)

DEFAULT_AUX_PRIME_BOUND = int(
    os.environ.get("MASSEYBRAUER_AUX_PRIME_BOUND", 10**6)
)


class SearchBoundExceeded(RuntimeError):
    """The configured search bound was exhausted before a witness was found."""


class NonSplittingError(ValueError):
    """The class does not split in the requested multiquadratic extension."""


def _is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = int(n**0.5)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r * r == n


def _primes(limit: int):
    yield 2
    n = 3
    while n <= limit:
        if all(n % d for d in range(3, int(n**0.5) + 1, 2)):
            yield n
        n += 2


def find_v0(
    s_places: Iterable[Place], a_list: list[int], bound: int = DEFAULT_AUX_PRIME_BOUND
) -> tuple[Place, list[int]]:
    """Smallest odd prime q outside S, coprime to every a_i, with a_1 a local
    nonsquare at q; also returns the adjusted list (a_1, a'_2, ..., a'_r)
    where a'_i is a_i or a_1 a_i, whichever is a nonsquare at q."""
    if not a_list:
        raise ValueError("need at least one entry")
    a1 = a_list[0]
    if _is_perfect_square(a1):
        raise ValueError(f"{a1} is a global square")
    s_set = set(s_places)
    for q in _primes(bound):
        if q == 2:
            continue
        v = Place.prime(q)
        if v in s_set or any(a % q == 0 for a in a_list):
            continue
        if is_local_square(a1, v):
            continue
        adjusted = [a1]
        for a in a_list[1:]:
            adjusted.append(a if not is_local_square(a, v) else a1 * a)
        return v, adjusted
    raise SearchBoundExceeded(f"no usable auxiliary prime below {bound}")


def partition_support(
    s_places: Iterable[Place], a_list: list[int]
) -> list[list[Place]]:
    """Assign each support place to the smallest index whose entry is a local
    nonsquare there; error if some place is missed (the class then cannot
    split in the multiquadratic extension)."""
    parts: list[list[Place]] = [[] for _ in a_list]
    for v in sorted(s_places):
        for i, a in enumerate(a_list):
            if not is_local_square(a, v):
                parts[i].append(v)
                break
        else:
            raise NonSplittingError(
                f"every entry is a square at {v}; class does not split"
            )
    return parts


def realize_as_cup(
    target: dict[Place, Fraction],
    a: int,
    aux_prime_bound: int = DEFAULT_AUX_PRIME_BOUND,
) -> int:
    """An integer x with local invariants of (a, x) equal to `target` exactly.

    Candidates are sign * d * w with d a divisor of the product of the
    relevant primes (2, odd primes of the target, odd primes dividing a) and
    w = 1 or a fresh auxiliary prime, scanned in increasing order; every
    candidate is verified by recomputing all Hilbert symbols, so any returned
    x is correct by construction.
    """
    target = {v: f for v, f in target.items() if f}
    if any(f != HALF for f in target.values()):
        raise ValueError("invariants must be 0 or 1/2")
    if len(target) % 2:
        raise ValueError("odd number of ramified places violates reciprocity")
    for v in target:
        if is_local_square(a, v):
            raise NonSplittingError(
                f"{a} is a local square at {v}; (a, x) cannot ramify there"
            )
    if not target:
        return 1

    relevant = {2}
    relevant.update(q for q in factorize(a))
    relevant.update(v.q for v in target if v.finite)
    relevant.discard(0)
    pool = sorted(relevant)
    divisors = sorted(
        {
            _product(combo)
            for k in range(len(pool) + 1)
            for combo in itertools.combinations(pool, k)
        }
    )

    def candidates():
        yield 1
        for q in _primes(aux_prime_bound):
            if q not in relevant:
                yield q

    for w in candidates():
        for d in divisors:
            for sign in (1, -1):
                x = sign * d * w
                if BrauerClass2([(a, x)]).local_invariants() == target:
                    return x
    raise SearchBoundExceeded(
        f"no x found with auxiliary primes below {aux_prime_bound}"
    )


def _product(items) -> int:
    out = 1
    for x in items:
        out *= x
    return out


@dataclass
class DecompositionCertificate:
    """Full audit trail of one decomposition c = sum_i (a_i, x_i)."""

    symbols: list[tuple[int, int]]  # the input class
    a_list: list[int]
    x_list: list[int]
    v0: Place | None
    adjusted_a_list: list[int] | None
    partition: list[list[Place]]  # S'_i in input order (post-reordering)
    t_parities: list[int]  # t_i in units of 1/2, mod 2
    order: list[int] = field(default_factory=list)  # reordering applied to a_list

    def input_class(self) -> BrauerClass2:
        return BrauerClass2(self.symbols)

    def output_class(self) -> BrauerClass2:
        return BrauerClass2(
            [(a, x) for a, x in zip(self.a_list, self.x_list)]
        )


def decompose(
    c: BrauerClass2,
    a_list: list[int],
    aux_prime_bound: int = DEFAULT_AUX_PRIME_BOUND,
) -> DecompositionCertificate:
    """Decompose c as sum (a_i, x_i); raises NonSplittingError when c does
    not split over the multiquadratic extension of the a_i."""
    a_list = [int(a) for a in a_list]
    if not a_list:
        raise ValueError("need at least one entry")
    if not splits_in_multiquadratic(c, a_list):
        raise NonSplittingError("class does not split in the given extension")
    symbols = [(s.a, s.b) for s in c.symbols]
    support = c.support()
    r = len(a_list)

    if not support:
        return DecompositionCertificate(
            symbols, a_list, [1] * r, None, None, [[] for _ in a_list], [0] * r,
            list(range(r)),
        )

    # reorder so the leading entry is not a global square
    lead = next((i for i, a in enumerate(a_list) if not _is_perfect_square(a)), None)
    if lead is None:
        raise NonSplittingError(
            "all entries are global squares but the class is nontrivial"
        )
    order = [lead] + [i for i in range(r) if i != lead]
    ordered = [a_list[i] for i in order]

    v0, adjusted = find_v0(support, ordered, aux_prime_bound)
    parts = partition_support(support, adjusted)
    t_par = [len(part) % 2 for part in parts]

    targets: list[dict[Place, Fraction]] = []
    for part, t in zip(parts, t_par):
        target = {v: HALF for v in part}
        if t:
            target[v0] = HALF  # -t_i = 1/2 mod 1
        targets.append(target)

    # realize the adjusted entries i >= 2 first; where a'_i = a_1 a_i the
    # symbol (a_1 a_i, x) re-expands as (a_1, x) + (a_i, x), and the (a_1, x)
    # leg is folded into the leading target before it is realized
    xs: list[int | None] = [None] * r
    lead_target = dict(targets[0])
    for i in range(1, r):
        if not targets[i]:
            xs[i] = 1
            continue
        x = realize_as_cup(targets[i], adjusted[i], aux_prime_bound)
        xs[i] = x
        if adjusted[i] != ordered[i]:
            extra = BrauerClass2([(ordered[0], x)]).local_invariants()
            lead_target = _xor_invariants(lead_target, extra)
    xs[0] = realize_as_cup(lead_target, ordered[0], aux_prime_bound) if lead_target else 1

    # undo the reordering
    final_x = [1] * r
    final_parts: list[list[Place]] = [[] for _ in range(r)]
    final_t = [0] * r
    adjusted_in_input_order = [0] * r
    for pos, idx in enumerate(order):
        final_x[idx] = int(xs[pos])
        final_parts[idx] = parts[pos]
        final_t[idx] = t_par[pos]
        adjusted_in_input_order[idx] = adjusted[pos]

    cert = DecompositionCertificate(
        symbols, a_list, final_x, v0, adjusted_in_input_order, final_parts,
        final_t, order,
    )
    ok, reason = verify_certificate(cert)
    if not ok:
        raise RuntimeError(f"internal error: emitted certificate invalid ({reason})")
    return cert


def _xor_invariants(
    left: dict[Place, Fraction], right: dict[Place, Fraction]
) -> dict[Place, Fraction]:
    out = dict(left)
    for v in right:
        if v in out:
            del out[v]
        else:
            out[v] = HALF
    return out


def decompose_biquadratic(
    c: BrauerClass2, a1: int, a2: int, aux_prime_bound: int = DEFAULT_AUX_PRIME_BOUND
) -> DecompositionCertificate:
    """The r = 2 case: c = (a1, x) + (a2, y)."""
    return decompose(c, [a1, a2], aux_prime_bound)


def verify_certificate(cert: DecompositionCertificate) -> tuple[bool, str]:
    """Recompute everything from scratch; returns (ok, reason)."""
    c = cert.input_class()
    support = set(c.support())
    claimed = [v for part in cert.partition for v in part]
    if len(claimed) != len(set(claimed)):
        return False, "partition pieces overlap"
    if set(claimed) != support:
        return False, "partition does not cover the support"
    ref = cert.adjusted_a_list if cert.adjusted_a_list is not None else cert.a_list
    for a, part, t in zip(ref, cert.partition, cert.t_parities):
        for v in part:
            if is_local_square(a, v):
                return False, f"{a} is a local square at assigned place {v}"
        if t != len(part) % 2:
            return False, "recorded parity disagrees with the partition"
        if (len(part) + t) % 2:
            return False, "per-entry target violates reciprocity"
    if len(cert.x_list) != len(cert.a_list):
        return False, "entry/witness length mismatch"
    if not classes_equal(c, cert.output_class()):
        return False, "local invariants of the output differ from the input"
    return True, "ok"
