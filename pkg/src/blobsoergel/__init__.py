"""Exact residue, tableau, light-leaf and cellular-basis computations for the
blob algebra b_n(q, m) and the infinite dihedral group."""

from .bridge import BijectionReport, F, F_mu, decomposition_matrix, verify_bijection
from .cellular import CellDatum, basis_of, central_element_degree, graded_dim_b, y_model
from .dihedral import DihedralElement, act, alcove_of, bruhat_leq, kl_h, same_orbit
from .dotline import DotLineElement, dimension_oracle, normal_form, ordering_annihilation_check
from .errors import BlobSoergelError
from .laurent import LaurentPoly, v
from .lightleaves import DoubleLeaf, LightLeaf, double_leaves, enumerate_leaves, graded_dim_A, leaves_by_top
from .params import Params, cartan, validate_params
from .symmetric import Permutation, block_decomposition, d_of, is_321_avoiding, klr_degree
from .tableaux import (
    LambdaData,
    OneLineBipartition,
    StandardBitableau,
    Walk,
    enumerate_std,
    enumerate_std_n,
    equivalence_class,
    is_residue_sequence,
    lambda_data,
    residue_sequence,
    tableau_of,
    tmax,
    walk_of,
)

__version__ = "0.1.0"

__all__ = [
    "BijectionReport",
    "BlobSoergelError",
    "CellDatum",
    "DihedralElement",
    "DotLineElement",
    "DoubleLeaf",
    "F",
    "F_mu",
    "LambdaData",
    "LaurentPoly",
    "LightLeaf",
    "OneLineBipartition",
    "Params",
    "Permutation",
    "StandardBitableau",
    "Walk",
    "act",
    "alcove_of",
    "basis_of",
    "block_decomposition",
    "bruhat_leq",
    "cartan",
    "central_element_degree",
    "d_of",
    "decomposition_matrix",
    "dimension_oracle",
    "double_leaves",
    "enumerate_leaves",
    "enumerate_std",
    "enumerate_std_n",
    "equivalence_class",
    "graded_dim_A",
    "graded_dim_b",
    "is_321_avoiding",
    "is_residue_sequence",
    "kl_h",
    "klr_degree",
    "lambda_data",
    "leaves_by_top",
    "normal_form",
    "ordering_annihilation_check",
    "residue_sequence",
    "same_orbit",
    "tableau_of",
    "tmax",
    "v",
    "validate_params",
    "verify_bijection",
    "walk_of",
    "y_model",
]
