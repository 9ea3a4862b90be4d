"""Exact computer algebra for infinitesimal Cherednik algebras of gl(n).

Construct the deformed algebras from a parameter vector, multiply in the
PBW normal form, compute the central generators, evaluate central
characters on Verma modules, and verify the prime-characteristic center,
all over exact rationals or a prime field.
"""

from .scalars import GF, QQ, field_of_characteristic
from .polyring import (
    BivarSeries,
    Poly,
    PolyRing,
    char_poly_coeffs,
    gf_coeffs,
    gradient_matrix,
    hessian_identity_check,
    lambda_identity_check,
    sym_to_matrixpoly,
)
from .pbw import (
    AlgebraSpec,
    E,
    NCElement,
    X,
    Y,
    anti_involution,
    check_pbw_consistency,
    commutator,
    element_from_word,
    filtration_degree,
    multiply,
    nc_from_json,
    nc_to_json,
    scalar_element,
    sym_on_L,
    symmetrization,
    undeformed_spec,
)
from .deform import DeformationParams, pairing_from_params, r_poly
from .center import (
    CentralSet,
    beta,
    central_generators,
    solve_correction,
    symmetrized_invariants_check,
    t_element,
    top_symbol_crosscheck,
    uniqueness_relation_check,
    verify_central,
)
from .rep import (
    VermaVector,
    central_character,
    finiteness_probe,
    hc_evaluate,
    same_block,
    vacuum_vector,
    verma_act,
)
from .charp import (
    Gl1Spec,
    gl1_build,
    gl1_casimir,
    gl1_p_center_check,
    p_center_check,
    z0_rank_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]
