"""
Quaternion linear algebra: row/column determinants and the complex adjoint oracle.
"""

from .adjoint import complex_adjoint, oracle_determinant, oracle_eigenvalues
from .determinants import (
    Arranger,
    arrangements,
    canonical_arrangement,
    cdet,
    char_poly_hermitian,
    det_hermitian,
    is_invertible,
    iter_arrangements,
    principal_minor_sum,
    rank_determinantal,
    rdet,
    term_bound,
)

__all__ = [
    "Arranger",
    "arrangements",
    "canonical_arrangement",
    "cdet",
    "char_poly_hermitian",
    "complex_adjoint",
    "det_hermitian",
    "is_invertible",
    "iter_arrangements",
    "oracle_determinant",
    "oracle_eigenvalues",
    "principal_minor_sum",
    "rank_determinantal",
    "rdet",
    "term_bound",
]
