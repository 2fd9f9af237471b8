"""masseybrauer: exact mod-p group cohomology (cup products, triple Massey
products, unipotent homomorphism searches) and constructive decomposition of
2-torsion Brauer classes over Q split by multiquadratic extensions."""

from .brauer_q import (
    BrauerClass2,
    Place,
    QuaternionSymbol,
    classes_equal,
    hilbert_symbol,
    is_local_square,
    local_invariants,
    splits_in_multiquadratic,
)
from .catalog import builtin_group
from .cochain_dga import (
    Cochain,
    CohomologyBasis,
    CohomologyRing,
    class_coordinates,
    cohomology,
    cup,
    differential,
    get_ring,
    restrict,
)
from .cup_restriction import has_property, lambda_image, res_kernel_h2
from .fp_linalg import FpMatrix, FpVector, kernel_basis, membership, solve_linear
from .group_core import (
    Character,
    FiniteGroup,
    Subgroup,
    close_generators,
    cyclic_group,
    dihedral_group,
    direct_product,
    elementary_abelian,
    frattini_p_quotient,
    kernel_of_characters,
    quaternion_group,
)
from .lgp_decompose import (
    DecompositionCertificate,
    decompose,
    decompose_biquadratic,
    find_v0,
    partition_support,
    realize_as_cup,
    verify_certificate,
)
from .massey import (
    DefiningSystem,
    MasseyCoset,
    contains_zero,
    find_triple_defining_system,
    scan_vanishing,
    tilde,
    triple_massey_set,
)
from .unipotent import (
    GroupHom,
    UnipotentGroup,
    build_unipotent,
    check_surjective,
    find_prescribed_hom,
    frattini_criterion,
    gamma_from_system,
)

__version__ = "0.1.0"

__all__ = [
    "BrauerClass2", "Place", "QuaternionSymbol", "classes_equal",
    "hilbert_symbol", "is_local_square", "local_invariants",
    "splits_in_multiquadratic", "builtin_group", "Cochain", "CohomologyBasis",
    "CohomologyRing", "class_coordinates", "cohomology", "cup",
    "differential", "get_ring", "restrict", "has_property", "lambda_image",
    "res_kernel_h2", "FpMatrix", "FpVector", "kernel_basis", "membership",
    "solve_linear", "Character", "FiniteGroup", "Subgroup",
    "close_generators", "cyclic_group", "dihedral_group", "direct_product",
    "elementary_abelian", "frattini_p_quotient", "kernel_of_characters",
    "quaternion_group", "DecompositionCertificate", "decompose",
    "decompose_biquadratic", "find_v0", "partition_support", "realize_as_cup",
    "verify_certificate", "DefiningSystem", "MasseyCoset", "contains_zero",
    "find_triple_defining_system", "scan_vanishing", "tilde",
    "triple_massey_set", "GroupHom", "UnipotentGroup", "build_unipotent",
    "check_surjective", "find_prescribed_hom", "frattini_criterion",
    "gamma_from_system",
]
