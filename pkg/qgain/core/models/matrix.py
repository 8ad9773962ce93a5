"""
Dense quaternion matrices.
"""

from __future__ import annotations

from typing import Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ..exceptions import DimensionMismatchError, IndexOutOfRangeError, NonFiniteComponentError
from .quaternion import Components, Quaternion, hamilton

QuaternionLike = Union[Quaternion, int, float, str, Sequence[float]]


class QMatrix:
    """
    Dense rows x cols matrix over the quaternions.

    Entries live in a read-only float array of shape (rows, cols, 4) holding
    (w, x, y, z) per entry. All operations return new matrices.
    """

    __slots__ = ("_data",)

    def __init__(self, data: Union[np.ndarray, Sequence]) -> None:
        array = np.array(data, dtype=float)
        if array.ndim != 3 or array.shape[2] != 4:
            raise DimensionMismatchError(
                f"Quaternion matrix data must have shape (rows, cols, 4), got {array.shape}"
            )
        if not np.all(np.isfinite(array)):
            raise NonFiniteComponentError("Quaternion matrix contains non-finite components")
        array.setflags(write=False)
        self._data = array

    # Construction

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(np.zeros((rows, cols, 4)))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls.diag([1.0] * n)

    @classmethod
    def diag(cls, values: Iterable[QuaternionLike]) -> "QMatrix":
        entries = [Quaternion.coerce(v) for v in values]
        data = np.zeros((len(entries), len(entries), 4))
        for i, q in enumerate(entries):
            data[i, i] = q.components()
        return cls(data)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[QuaternionLike]]) -> "QMatrix":
        """Build from nested rows of quaternions, reals, unit tokens or 4-lists."""
        if not rows:
            return cls.zeros(0, 0)
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise DimensionMismatchError("All rows must have the same length")
        data = np.zeros((len(rows), width, 4))
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                data[i, j] = Quaternion.coerce(value).components()
        return cls(data)

    # Shape and access

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Quaternion:
        i, j = index
        self._check_row(i)
        self._check_col(j)
        return Quaternion(*self._data[i, j])

    def row(self, i: int) -> List[Quaternion]:
        self._check_row(i)
        return [Quaternion(*c) for c in self._data[i]]

    def column(self, j: int) -> List[Quaternion]:
        self._check_col(j)
        return [Quaternion(*c) for c in self._data[:, j]]

    def entry_tuples(self) -> Tuple[Tuple[Components, ...], ...]:
        """Entries as nested tuples of (w, x, y, z), for tight scalar loops."""
        return tuple(tuple(tuple(float(c) for c in entry) for entry in row) for row in self._data)

    def to_list(self) -> list:
        return self._data.tolist()

    # Algebra

    def conj_transpose(self) -> "QMatrix":
        """A*: transpose with every entry conjugated."""
        swapped = np.transpose(self._data, (1, 0, 2)).copy()
        swapped[..., 1:] *= -1.0
        return QMatrix(swapped)

    @property
    def H(self) -> "QMatrix":
        return self.conj_transpose()

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if not isinstance(other, QMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatchError(f"Cannot multiply {self.shape} by {other.shape}")
        if self.cols == 0:
            return QMatrix.zeros(self.rows, other.cols)
        products = hamilton(self._data[:, :, None, :], other._data[None, :, :, :])
        return QMatrix(products.sum(axis=1))

    def __add__(self, other: "QMatrix") -> "QMatrix":
        if not isinstance(other, QMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return QMatrix(self._data + other._data)

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        if not isinstance(other, QMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return QMatrix(self._data - other._data)

    def __neg__(self) -> "QMatrix":
        return QMatrix(-self._data)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "QMatrix":
        for i in rows:
            self._check_row(i)
        for j in cols:
            self._check_col(j)
        picked = self._data[np.ix_(list(rows), list(cols))] if rows and cols else np.zeros((len(rows), len(cols), 4))
        return QMatrix(picked)

    def principal(self, indices: Sequence[int]) -> "QMatrix":
        """Principal submatrix A[alpha, alpha]."""
        return self.submatrix(indices, indices)

    def replace_row(self, i: int, values: Sequence[QuaternionLike]) -> "QMatrix":
        self._check_row(i)
        if len(values) != self.cols:
            raise DimensionMismatchError(f"Row must have {self.cols} entries")
        data = self._data.copy()
        data[i] = [Quaternion.coerce(v).components() for v in values]
        return QMatrix(data)

    def replace_column(self, j: int, values: Sequence[QuaternionLike]) -> "QMatrix":
        self._check_col(j)
        if len(values) != self.rows:
            raise DimensionMismatchError(f"Column must have {self.rows} entries")
        data = self._data.copy()
        data[:, j] = [Quaternion.coerce(v).components() for v in values]
        return QMatrix(data)

    def add_left_row_combination(self, i: int, coefficients: Mapping[int, Quaternion]) -> "QMatrix":
        """Replace row i by a_i. + sum c_l a_l. (coefficients multiply from the left)."""
        self._check_row(i)
        data = self._data.copy()
        for l, c in coefficients.items():
            self._check_row(l)
            if l == i:
                raise IndexOutOfRangeError("A row combination must use other rows")
            data[i] += hamilton(np.asarray(c.components()), self._data[l])
        return QMatrix(data)

    def add_right_column_combination(self, j: int, coefficients: Mapping[int, Quaternion]) -> "QMatrix":
        """Replace column j by a_.j + sum a_.l c_l (coefficients multiply from the right)."""
        self._check_col(j)
        data = self._data.copy()
        for l, c in coefficients.items():
            self._check_col(l)
            if l == j:
                raise IndexOutOfRangeError("A column combination must use other columns")
            data[:, j] += hamilton(self._data[:, l], np.asarray(c.components()))
        return QMatrix(data)

    # Comparison

    def max_deviation(self, other: "QMatrix") -> float:
        """Largest absolute componentwise difference."""
        self._check_same_shape(other)
        if self._data.size == 0:
            return 0.0
        return float(np.max(np.abs(self._data - other._data)))

    def allclose(self, other: "QMatrix", tol: float) -> bool:
        return self.shape == other.shape and self.max_deviation(other) <= tol

    def hermitian_deviation(self) -> float:
        """max |A - A*| componentwise; infinite for non-square matrices."""
        if not self.is_square:
            return float("inf")
        return self.max_deviation(self.conj_transpose())

    def is_hermitian(self, tol: float) -> bool:
        return self.hermitian_deviation() <= tol

    def __repr__(self) -> str:
        rows = ["[" + ", ".join(str(Quaternion(*c)) for c in row) + "]" for row in self._data]
        return f"QMatrix({self.rows}x{self.cols}, [{', '.join(rows)}])"

    # Internal checks

    def _check_row(self, i: int) -> None:
        if not 0 <= i < self.rows:
            raise IndexOutOfRangeError(f"Row index {i} outside 0..{self.rows - 1}")

    def _check_col(self, j: int) -> None:
        if not 0 <= j < self.cols:
            raise IndexOutOfRangeError(f"Column index {j} outside 0..{self.cols - 1}")

    def _check_same_shape(self, other: "QMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"Shape mismatch: {self.shape} vs {other.shape}")


def direct_sum(a: QMatrix, b: QMatrix) -> QMatrix:
    """Block-diagonal matrix [[A, 0], [0, B]]."""
    data = np.zeros((a.rows + b.rows, a.cols + b.cols, 4))
    data[: a.rows, : a.cols] = a.data
    data[a.rows :, a.cols :] = b.data
    return QMatrix(data)
