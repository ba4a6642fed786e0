"""Exact arithmetic for Eulerian-type polynomial families.

The package computes Eulerian, binomial Eulerian, derangement and type B
analogues with exact rational coefficients, certifies real-rootedness and
interlacing via Sturm sequences, applies the associated linear transforms,
and evaluates the same machinery on uniform triangulations of simplices
through their f-triangles.
"""

from .budget import face_limit, group_limit
from .errors import BudgetExceeded, CertificationError
from .permutations import (
    Permutation,
    bad_k,
    brute_force_family,
    colored_permutations,
    des_B,
    fix_k,
    flag_excedance_poly,
    fundamental_transformation,
    signed_permutations,
    stats,
    symmetric_group,
    xi_counts,
)
from .poly import (
    ONE,
    X,
    ZERO,
    GammaVector,
    Poly,
    SymmetricDecomposition,
    basis_p_coeffs,
    basis_p_combination,
    gamma_expand,
    is_gamma_positive,
    is_symmetric,
    is_unimodal,
    one_plus_x_power,
    poly_gcd,
    reciprocal,
    squarefree_decomposition,
    symmetric_decomposition,
)
from .roots import (
    DecompositionVerdict,
    IsolatingInterval,
    interlaces,
    interlaces_checked,
    interlacing_failures,
    interlacing_symmetric_decomposition,
    is_interlacing_sequence,
    is_real_rooted,
    isolate_roots,
)
from .simplicial import (
    AntiprismSphere,
    CarriedTriangulation,
    FTriangle,
    SimplicialComplex,
    antiprism_partial,
    antiprism_sphere,
    barycentric_f_triangle,
    barycentric_subdivision,
    colored_barycentric,
    edgewise_subdivision,
    f_triangle,
    faces_as_index_lines,
    ft_boundary_h,
    ft_h,
    ft_h_interior,
    ft_h_transform,
    ft_interior_transform,
    ft_lnk,
    ft_local_transform,
    ft_qnk,
    ft_theta,
    h_poly,
    restriction,
    sd_complex,
    theta_flags,
    trivial_f_triangle,
    trivial_triangulation,
)
from .transforms import (
    LinearTransform,
    apply_transform,
    basis_sequence,
    binomial_eulerian,
    derangement,
    derangement_transform,
    dnk,
    eulerian,
    eulerian_transform,
    generic_hnk,
    generic_lnk,
    plain_eulerian_transform,
    pnk,
    qnk,
    qnkj,
    qnkj_star,
    typeB_derangement_image,
    typeB_derangement_transform,
    typeB_eulerian,
    typeB_transform,
)

__version__ = "0.1.0"

__all__ = [
    "AntiprismSphere",
    "BudgetExceeded",
    "CarriedTriangulation",
    "CertificationError",
    "DecompositionVerdict",
    "FTriangle",
    "GammaVector",
    "IsolatingInterval",
    "LinearTransform",
    "ONE",
    "Permutation",
    "Poly",
    "SimplicialComplex",
    "SymmetricDecomposition",
    "X",
    "ZERO",
    "antiprism_partial",
    "antiprism_sphere",
    "apply_transform",
    "bad_k",
    "barycentric_f_triangle",
    "barycentric_subdivision",
    "basis_p_coeffs",
    "basis_p_combination",
    "basis_sequence",
    "binomial_eulerian",
    "brute_force_family",
    "colored_barycentric",
    "colored_permutations",
    "derangement",
    "derangement_transform",
    "des_B",
    "dnk",
    "edgewise_subdivision",
    "eulerian",
    "eulerian_transform",
    "f_triangle",
    "face_limit",
    "faces_as_index_lines",
    "fix_k",
    "flag_excedance_poly",
    "ft_boundary_h",
    "ft_h",
    "ft_h_interior",
    "ft_h_transform",
    "ft_interior_transform",
    "ft_lnk",
    "ft_local_transform",
    "ft_qnk",
    "ft_theta",
    "fundamental_transformation",
    "gamma_expand",
    "generic_hnk",
    "generic_lnk",
    "group_limit",
    "h_poly",
    "interlaces",
    "interlaces_checked",
    "interlacing_failures",
    "interlacing_symmetric_decomposition",
    "is_gamma_positive",
    "is_interlacing_sequence",
    "is_real_rooted",
    "is_symmetric",
    "is_unimodal",
    "isolate_roots",
    "one_plus_x_power",
    "plain_eulerian_transform",
    "pnk",
    "poly_gcd",
    "qnk",
    "qnkj",
    "qnkj_star",
    "reciprocal",
    "restriction",
    "sd_complex",
    "signed_permutations",
    "squarefree_decomposition",
    "stats",
    "symmetric_decomposition",
    "symmetric_group",
    "theta_flags",
    "trivial_f_triangle",
    "trivial_triangulation",
    "typeB_derangement_image",
    "typeB_derangement_transform",
    "typeB_eulerian",
    "typeB_transform",
    "xi_counts",
]
