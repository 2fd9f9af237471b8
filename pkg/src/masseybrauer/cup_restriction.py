"""The cup-product / restriction exactness test.

For characters chi_1..chi_r with common kernel K, the image of the
multi-linear map (phi_i) -> sum chi_i u phi_i always sits inside the kernel
of H^2(G) -> H^2(K); the property of interest is equality of the two
subspaces.  Whether it holds depends only on K, not on the character list.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cochain_dga import Cochain, cup, get_ring, restrict
from .fp_linalg import FpMatrix, in_row_space, kernel_basis, row_space_basis
from .group_core import Character, FiniteGroup, Subgroup, kernel_of_characters


@dataclass
class LambdaImage:
    """Basis rows of sum_i chi_i u H^1(G) in H^2 coordinates."""

    basis: np.ndarray
    p: int

    @property
    def dim(self) -> int:
        return self.basis.shape[0]


def lambda_image(group: FiniteGroup, chars: list[Character], p: int | None = None) -> LambdaImage:
    """Image subspace of the map (phi_i) -> sum chi_i u phi_i."""
    if chars:
        p = chars[0].p
    elif p is None:
        raise ValueError("empty character list needs an explicit modulus")
    ring = get_ring(group, p)
    h2 = ring.basis(2)
    rows = []
    for chi in chars:
        c = Cochain.from_character(chi)
        for phi in ring.basis(1).representatives:
            rows.append(h2.coordinates(cup(c, phi)))
    if not rows:
        return LambdaImage(np.zeros((0, h2.dim), dtype=np.int64), p)
    return LambdaImage(row_space_basis(np.stack(rows), p), p)


def res_kernel_h2(group: FiniteGroup, sub: Subgroup, p: int) -> np.ndarray:
    """Basis rows of Ker(res: H^2(G) -> H^2(K)) in H^2(G) coordinates."""
    ring = get_ring(group, p)
    h2 = ring.basis(2)
    sub_group, _ = sub.as_group()
    sub_ring = get_ring(sub_group, p)
    sub_h2 = sub_ring.basis(2)
    # matrix of res in coordinates: column per G-representative
    cols = []
    for rep in h2.representatives:
        res = restrict(rep, sub)
        cols.append(sub_h2.coordinates(res))
    if h2.dim == 0:
        return np.zeros((0, 0), dtype=np.int64)
    mat = FpMatrix(p, np.stack(cols, axis=1) if sub_h2.dim else np.zeros((0, h2.dim)))
    ker = kernel_basis(mat)
    if not ker:
        return np.zeros((0, h2.dim), dtype=np.int64)
    return row_space_basis(np.stack([v.entries for v in ker]), p)


@dataclass
class PropertyVerdict:
    holds: bool
    dim_image: int
    dim_kernel: int
    witness: np.ndarray | None  # class in the kernel but not the image


def has_property(
    group: FiniteGroup, chars: list[Character], p: int | None = None
) -> PropertyVerdict:
    """Exactness of H^1(G)^r -> H^2(G) -> H^2(K) at the middle term, with
    K recomputed from the character list; on failure carries a witness."""
    if chars:
        p = chars[0].p
    elif p is None:
        raise ValueError("empty character list needs an explicit modulus")
    sub = kernel_of_characters(chars, group)
    image = lambda_image(group, chars, p)
    kernel = res_kernel_h2(group, sub, p)
    if image.dim == kernel.shape[0]:
        return PropertyVerdict(True, image.dim, kernel.shape[0], None)
    witness = None
    for row in kernel:
        if not in_row_space(row, image.basis, p):
            witness = row
            break
    return PropertyVerdict(False, image.dim, kernel.shape[0], witness)


def property_for_subgroup(group: FiniteGroup, sub: Subgroup, p: int) -> PropertyVerdict:
    """The subgroup-level property, using the deterministic character list
    dual to G/K (any list with kernel K gives the same verdict)."""
    ring = get_ring(group, p)
    basis_chars = ring.h1_characters()
    if basis_chars:
        vals = np.stack([c.values for c in basis_chars])  # (d, |G|)
        on_members = vals[:, list(sub.members)].T  # (|K|, d)
        coeffs = kernel_basis(FpMatrix(p, on_members))
        picked = [ring.character_from_coords(v.entries) for v in coeffs]
    else:
        picked = []
    if kernel_of_characters(picked, group).members != sub.members:
        raise ValueError("subgroup is not an intersection of character kernels")
    return has_property(group, picked, p)
