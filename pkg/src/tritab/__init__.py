"""tritab: spectral toolkit for structured tridiagonal matrices.

Closed-form characteristic polynomials and eigenvalues for several
tridiagonal families, character tables of P-polynomial table algebras, a
cyclic-pivot PLU factorization with an O(n) last-row recurrence, and
independent brute-force oracles for cross-validation.  Hot numeric kernels
run through a compiled extension when available and an equivalent pure
numpy lane otherwise (see ``tritab._kernels.BACKEND``).
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .chebyshev import cheb_t, cheb_t_trig, cheb_u, cheb_u_trig, verify_tu_identity
from .errors import (
    DimensionMismatchError,
    IndefiniteProductError,
    InvalidParameterError,
    NonPositiveParameterError,
    NonPositiveProductError,
    NotAnEigenvalueError,
    OrderTooLargeError,
    PreconditionError,
    TritabError,
    ZeroSubdiagonalError,
)
from .oracle import dense_det, eig_roots, residual, symmetrize
from .plu import (
    PLUFactors,
    b1_charpoly_via_plu,
    det_via_plu,
    left_eigenvector,
    plu_factor,
    reconstruction_residual,
    right_eigenvector,
    slogdet_via_plu,
)
from .spectra import (
    charpoly_a_eval,
    charpoly_p_eval,
    charpoly_q_eval,
    eigs_a,
    eigs_q,
    make_a,
    make_p,
    make_q,
)
from .table_algebra import (
    CharacterTable,
    TableAlgebraSpec,
    build_b1,
    character_table,
    class_i_characters,
    class_i_charpoly_eval,
    class_i_eigs,
    class_i_spec,
    class_ii_characters,
    class_ii_charpoly_eval,
    class_ii_eigs,
    class_ii_spec,
    nu_polynomials,
)
from .tridiag import (
    MAX_CHARPOLY_ORDER,
    Polynomial,
    TridiagonalMatrix,
    charpoly_coeffs,
    charpoly_eval,
    det_recurrence,
    slog_charpoly_eval,
    slogdet_recurrence,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "MAX_CHARPOLY_ORDER",
    "CharacterTable",
    "DimensionMismatchError",
    "IndefiniteProductError",
    "InvalidParameterError",
    "NonPositiveParameterError",
    "NonPositiveProductError",
    "NotAnEigenvalueError",
    "OrderTooLargeError",
    "PLUFactors",
    "Polynomial",
    "PreconditionError",
    "TableAlgebraSpec",
    "TridiagonalMatrix",
    "TritabError",
    "ZeroSubdiagonalError",
    "b1_charpoly_via_plu",
    "build_b1",
    "character_table",
    "charpoly_a_eval",
    "charpoly_coeffs",
    "charpoly_eval",
    "charpoly_p_eval",
    "charpoly_q_eval",
    "cheb_t",
    "cheb_t_trig",
    "cheb_u",
    "cheb_u_trig",
    "class_i_characters",
    "class_i_charpoly_eval",
    "class_i_eigs",
    "class_i_spec",
    "class_ii_characters",
    "class_ii_charpoly_eval",
    "class_ii_eigs",
    "class_ii_spec",
    "dense_det",
    "det_recurrence",
    "det_via_plu",
    "eig_roots",
    "eigs_a",
    "eigs_q",
    "left_eigenvector",
    "make_a",
    "make_p",
    "make_q",
    "nu_polynomials",
    "plu_factor",
    "reconstruction_residual",
    "residual",
    "right_eigenvector",
    "slog_charpoly_eval",
    "slogdet_recurrence",
    "slogdet_via_plu",
    "symmetrize",
    "verify_tu_identity",
]
