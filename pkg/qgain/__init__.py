"""
qgain - Laplacian determinants of quaternion unit gain graphs.

Computes det L(G) through the row/column determinant of the Hermitian
Laplacian and through the combinatorial sum over unicycle-like reductions,
and cross-checks both against a complex-adjoint oracle.
"""

__version__ = "1.0.0"
__author__ = "qgain contributors"
__description__ = "Quaternion unit gain graph Laplacian determinants and their verification"
