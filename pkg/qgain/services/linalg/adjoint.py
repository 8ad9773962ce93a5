"""
Complex adjoint representation, used as an independent determinant oracle.
"""

import numpy as np

from ...core.exceptions import DimensionMismatchError
from ...core.models.matrix import QMatrix


def complex_adjoint(matrix: QMatrix) -> np.ndarray:
    """
    chi(A) = [[A0, A1], [-conj(A1), conj(A0)]] where A = A0 + A1 j.

    A0 and A1 are complex matrices over span(1, i). chi is an algebra
    homomorphism with chi(A*) = chi(A)^H.
    """
    data = matrix.data
    a0 = data[..., 0] + 1j * data[..., 1]
    a1 = data[..., 2] + 1j * data[..., 3]
    return np.block([[a0, a1], [-a1.conj(), a0.conj()]])


def oracle_determinant(matrix: QMatrix) -> complex:
    """det chi(A) by LU factorization with partial pivoting."""
    if not matrix.is_square:
        raise DimensionMismatchError(f"Determinant needs a square matrix, got {matrix.shape}")
    if matrix.rows == 0:
        return 1.0 + 0.0j
    return complex(np.linalg.det(complex_adjoint(matrix)))


def oracle_eigenvalues(matrix: QMatrix) -> np.ndarray:
    """Eigenvalues of chi(A) for Hermitian A; each right eigenvalue of A appears twice."""
    if not matrix.is_square:
        raise DimensionMismatchError(f"Eigenvalues need a square matrix, got {matrix.shape}")
    return np.linalg.eigvalsh(complex_adjoint(matrix))
