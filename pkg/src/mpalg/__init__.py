"""Multiset partition algebras: exact structure constants, a matrix-level oracle
in the centralizer of S_n on symmetric tensors, and the symmetric-function side
(dimensions, branching and restriction multiplicities)."""

from .algebra import AlgebraElement, bar_involution, evaluate_at, identity, multiply
from .centralizer import (EndoMatrix, commutant_check, compare_product, matrix_rank, monomial_basis,
                          oracle_dimension, orbit_expansion, orbit_matrix, permutation_matrix,
                          reynolds_projector, reynolds_rank, sigma_action, verify_all, verify_isomorphism)
from .combinatorics import (ColoredMultisetPartition, Multiset, MultisetPartition, ThreeRowPartition,
                            coeff_a, coeff_b, colorings, count_msp, enumerate_gluings, enumerate_msp,
                            format_partition, is_self_symmetric, last_letter_cmp, parse_partition, restrict,
                            self_symmetric_msp)
from .errors import PartitionSyntaxError, ResourceLimitError
from .polynomial import PolyX
from .series import QSeries
from .symfunc import (InconsistencyError, algebra_dim, branching_multiplicity, character,
                      irrep_dimension, kronecker_coefficient, lr_coefficient, min_degree_threshold,
                      plethysm_series, restriction_multiplicity)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement", "ColoredMultisetPartition", "EndoMatrix", "InconsistencyError", "Multiset",
    "MultisetPartition", "PartitionSyntaxError", "PolyX", "QSeries", "ResourceLimitError",
    "ThreeRowPartition", "algebra_dim", "bar_involution", "branching_multiplicity", "character",
    "coeff_a", "coeff_b", "colorings", "commutant_check", "compare_product", "count_msp",
    "enumerate_gluings", "enumerate_msp", "evaluate_at", "format_partition", "identity",
    "irrep_dimension", "is_self_symmetric", "kronecker_coefficient", "last_letter_cmp",
    "lr_coefficient", "matrix_rank", "min_degree_threshold", "monomial_basis", "multiply",
    "oracle_dimension", "orbit_expansion", "orbit_matrix", "parse_partition", "permutation_matrix",
    "plethysm_series", "restrict", "restriction_multiplicity", "reynolds_projector", "reynolds_rank",
    "self_symmetric_msp", "sigma_action", "verify_all", "verify_isomorphism",
]
