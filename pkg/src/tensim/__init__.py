"""tensim: similarity of dense complex tensors under the general product.

Core objects are  :class:`~tensim.core.Tensor` (dense order-m, dimension-n
arrays), witnesses ``(P, Q)`` with ``P I Q = I``, and their canonical
``(sigma, D)`` form for order at least 3.  The package provides the general
tensor product, permutation and diagonal similarity transforms, witness
decomposition and verification, a similarity decision procedure with
machine-checked invariants, and dimension-2 characteristic polynomials.
"""

from .core import (
    DEFAULT_CLEAN_EPS,
    DEFAULT_ENTRY_LIMIT,
    Tensor,
    allclose,
    clean,
    diagonal_tensor,
    identity_matrix,
    is_diagonal,
    is_diagonal_matrix,
    is_generalized_permutation,
    is_invertible,
    is_lower_triangular,
    is_permutation_matrix,
    is_upper_triangular,
    majorization_matrix,
    max_abs_diff,
    multi_index_to_offset,
    nnz,
    offset_to_multi_index,
    unit_tensor,
    zero_pattern,
)
from .decision import (
    InvariantReport,
    ScalingConstraint,
    ScalingConstraintSystem,
    canonical_pattern_hash,
    decide_similar,
    pattern_permutations,
    similarity_invariants,
    solve_diagonal,
    triangularizable_pattern,
)
from .errors import (
    EntryLimitError,
    FormatError,
    OrderError,
    SearchLimitError,
    ShapeError,
    TensimError,
    UnsupportedDimensionError,
    WitnessError,
)
from .product import (
    apply_to_vector,
    general_product,
    left_matrix_product,
    right_matrix_product,
)
from .similarity import (
    COMPARE_TOL,
    STRUCTURAL_TOL,
    DiagonalScaling,
    Permutation,
    StructuredWitness,
    Witness,
    WitnessStructureReport,
    check_unit_preserving,
    compose_witness,
    decompose_witness,
    diagonal_transform,
    factor_similarity,
    general_transform,
    permutation_transform,
    structured_transform,
    witness_products,
    witness_structure_report,
)
from .spectral import (
    CharPoly,
    char_poly_dim2,
    charpolys_equivalent,
    eigen_residual,
    eigenvector_dim2,
    spectra_match,
    spectrum_dim2,
)

__version__ = "0.1.0"

__all__ = [
    "CharPoly",
    "COMPARE_TOL",
    "DEFAULT_CLEAN_EPS",
    "DEFAULT_ENTRY_LIMIT",
    "DiagonalScaling",
    "EntryLimitError",
    "FormatError",
    "InvariantReport",
    "OrderError",
    "Permutation",
    "ScalingConstraint",
    "ScalingConstraintSystem",
    "SearchLimitError",
    "ShapeError",
    "StructuredWitness",
    "STRUCTURAL_TOL",
    "Tensor",
    "TensimError",
    "UnsupportedDimensionError",
    "Witness",
    "WitnessError",
    "WitnessStructureReport",
    "allclose",
    "apply_to_vector",
    "canonical_pattern_hash",
    "char_poly_dim2",
    "charpolys_equivalent",
    "check_unit_preserving",
    "clean",
    "compose_witness",
    "decide_similar",
    "decompose_witness",
    "diagonal_tensor",
    "diagonal_transform",
    "eigen_residual",
    "eigenvector_dim2",
    "factor_similarity",
    "general_product",
    "general_transform",
    "identity_matrix",
    "is_diagonal",
    "is_diagonal_matrix",
    "is_generalized_permutation",
    "is_invertible",
    "is_lower_triangular",
    "is_permutation_matrix",
    "is_upper_triangular",
    "left_matrix_product",
    "majorization_matrix",
    "max_abs_diff",
    "multi_index_to_offset",
    "nnz",
    "offset_to_multi_index",
    "pattern_permutations",
    "permutation_transform",
    "right_matrix_product",
    "similarity_invariants",
    "solve_diagonal",
    "spectra_match",
    "spectrum_dim2",
    "structured_transform",
    "triangularizable_pattern",
    "unit_tensor",
    "witness_products",
    "witness_structure_report",
    "zero_pattern",
]
