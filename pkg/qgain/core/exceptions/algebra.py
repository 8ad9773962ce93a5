"""
Quaternion and quaternion-matrix exceptions.
"""


class QuaternionError(Exception):
    """Base exception for quaternion arithmetic errors."""
    pass


class NonFiniteComponentError(QuaternionError, ValueError):
    """Exception raised when a quaternion component is NaN or infinite."""
    pass


class ZeroDivisorError(QuaternionError, ZeroDivisionError):
    """Exception raised when inverting a quaternion whose norm is below tolerance."""
    pass


class MatrixError(Exception):
    """Base exception for quaternion matrix errors."""
    pass


class DimensionMismatchError(MatrixError, ValueError):
    """Exception raised when matrix shapes are incompatible with an operation."""
    pass


class IndexOutOfRangeError(MatrixError, IndexError):
    """Exception raised when a pivot, row or column index is outside the matrix."""
    pass


class NotHermitianError(MatrixError):
    """Exception raised when A differs from A* by more than the tolerance."""
    pass


class NotRealError(MatrixError):
    """Exception raised when a Hermitian determinant has a non-negligible imaginary part."""
    pass


class DeterminantMismatchError(MatrixError):
    """Exception raised when row and column determinants of a Hermitian matrix disagree."""
    pass
