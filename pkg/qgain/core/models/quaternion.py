"""
Quaternion value type and Hamilton product kernels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from ..exceptions import NonFiniteComponentError, ZeroDivisorError
from ...config import get_settings

Components = Tuple[float, float, float, float]
Real = Union[int, float]


def _tol(tol: Optional[float]) -> float:
    return get_settings().tolerance if tol is None else tol


def hamilton_tuple(a: Sequence[float], b: Sequence[float]) -> Components:
    """Hamilton product of two (w, x, y, z) tuples."""
    aw, ax, ay, az = a
    bw, bx, by, bz = b
    return (
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by - ax * bz + ay * bw + az * bx,
        aw * bz + ax * by - ay * bx + az * bw,
    )


def hamilton(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Broadcast Hamilton product over arrays whose last axis holds (w, x, y, z)."""
    aw, ax, ay, az = np.moveaxis(np.asarray(a, dtype=float), -1, 0)
    bw, bx, by, bz = np.moveaxis(np.asarray(b, dtype=float), -1, 0)
    return np.stack(
        [
            aw * bw - ax * bx - ay * by - az * bz,
            aw * bx + ax * bw + ay * bz - az * by,
            aw * by - ax * bz + ay * bw + az * bx,
            aw * bz + ax * by - ay * bx + az * bw,
        ],
        axis=-1,
    )


@dataclass(frozen=True, slots=True)
class Quaternion:
    """
    A quaternion q = w + x i + y j + z k with finite double-precision components.

    Multiplication follows i^2 = j^2 = k^2 = ijk = -1 and is noncommutative.
    """

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self) -> None:
        for name in ("w", "x", "y", "z"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise NonFiniteComponentError(f"Quaternion component {name} is not finite: {value}")
            object.__setattr__(self, name, value)

    # Construction

    @classmethod
    def from_components(cls, values: Iterable[Real]) -> "Quaternion":
        """Build from a 4-element sequence [w, x, y, z]."""
        items = list(values)
        if len(items) != 4:
            raise ValueError(f"A quaternion needs 4 components, got {len(items)}")
        return cls(*items)

    @classmethod
    def from_token(cls, token: str) -> "Quaternion":
        """Parse one of the unit tokens 1, -1, i, -i, j, -j, k, -k."""
        text = token.strip().lower()
        sign = 1.0
        if text.startswith(("+", "-")):
            sign = -1.0 if text[0] == "-" else 1.0
            text = text[1:]
        basis = _BASIS_TOKENS.get(text)
        if basis is None:
            raise ValueError(f"Unknown quaternion token: {token!r}")
        return cls(*(sign * c for c in basis))

    @classmethod
    def real(cls, value: Real) -> "Quaternion":
        return cls(float(value))

    @classmethod
    def coerce(cls, value: Union["Quaternion", Real, str, Sequence[Real]]) -> "Quaternion":
        """Accept a Quaternion, a real, a unit token or a 4-sequence."""
        if isinstance(value, Quaternion):
            return value
        if isinstance(value, str):
            return cls.from_token(value)
        if isinstance(value, (int, float, np.floating, np.integer)):
            return cls(float(value))
        return cls.from_components(value)

    # Views

    def components(self) -> Components:
        return (self.w, self.x, self.y, self.z)

    def to_list(self) -> list:
        return [self.w, self.x, self.y, self.z]

    @property
    def scalar(self) -> float:
        """Real part Re q."""
        return self.w

    @property
    def vector(self) -> Tuple[float, float, float]:
        """Imaginary part Im q as (x, y, z)."""
        return (self.x, self.y, self.z)

    def imag_norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    # Arithmetic

    def __add__(self, other: Union["Quaternion", Real]) -> "Quaternion":
        if isinstance(other, Quaternion):
            return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)
        if isinstance(other, (int, float)):
            return Quaternion(self.w + other, self.x, self.y, self.z)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: Union["Quaternion", Real]) -> "Quaternion":
        if isinstance(other, Quaternion):
            return Quaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)
        if isinstance(other, (int, float)):
            return Quaternion(self.w - other, self.x, self.y, self.z)
        return NotImplemented

    def __rsub__(self, other: Real) -> "Quaternion":
        if isinstance(other, (int, float)):
            return Quaternion(other - self.w, -self.x, -self.y, -self.z)
        return NotImplemented

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other: Union["Quaternion", Real]) -> "Quaternion":
        if isinstance(other, Quaternion):
            return Quaternion(*hamilton_tuple(self.components(), other.components()))
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other: Real) -> "Quaternion":
        # reals are central, so left and right scaling agree
        if isinstance(other, (int, float)):
            return self * other
        return NotImplemented

    def __truediv__(self, other: Real) -> "Quaternion":
        if isinstance(other, (int, float)):
            return Quaternion(self.w / other, self.x / other, self.y / other, self.z / other)
        return NotImplemented

    def conj(self) -> "Quaternion":
        """Conjugate w - x i - y j - z k."""
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm_squared(self) -> float:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def norm(self) -> float:
        return math.sqrt(self.norm_squared())

    def __abs__(self) -> float:
        return self.norm()

    def inverse(self, tol: Optional[float] = None) -> "Quaternion":
        """q^-1 = conj(q) / |q|^2."""
        if self.norm() <= _tol(tol):
            raise ZeroDivisorError(f"Quaternion {self} has no inverse")
        return self.conj() / self.norm_squared()

    # Predicates

    def is_unit(self, tol: Optional[float] = None) -> bool:
        return abs(self.norm() - 1.0) <= _tol(tol)

    def is_zero(self) -> bool:
        return self.w == 0.0 and self.x == 0.0 and self.y == 0.0 and self.z == 0.0

    def isclose(self, other: Union["Quaternion", Real], tol: Optional[float] = None) -> bool:
        """Componentwise equality within tol."""
        other = Quaternion.coerce(other)
        limit = _tol(tol)
        return all(abs(a - b) <= limit for a, b in zip(self.components(), other.components()))

    def similar(self, other: "Quaternion", tol: Optional[float] = None) -> bool:
        """True iff some nonzero u gives other = u^-1 q u (same real part and |Im|)."""
        limit = _tol(tol)
        return abs(self.w - other.w) <= limit and abs(self.imag_norm() - other.imag_norm()) <= limit

    def lipschitz_unit(self, tol: Optional[float] = None) -> Optional[str]:
        """Return the token of the unit in {+-1, +-i, +-j, +-k} equal to q, if any."""
        for token, unit in UNIT_TOKENS.items():
            if self.isclose(unit, tol):
                return token
        return None

    def __str__(self) -> str:
        parts = [f"{self.w:g}"]
        for value, symbol in ((self.x, "i"), (self.y, "j"), (self.z, "k")):
            parts.append(f"{'-' if value < 0 else '+'}{abs(value):g}{symbol}")
        return "".join(parts)


_BASIS_TOKENS = {
    "1": (1.0, 0.0, 0.0, 0.0),
    "i": (0.0, 1.0, 0.0, 0.0),
    "j": (0.0, 0.0, 1.0, 0.0),
    "k": (0.0, 0.0, 0.0, 1.0),
}

ZERO = Quaternion()
ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)

UNIT_TOKENS = {
    "1": ONE,
    "-1": -ONE,
    "i": I,
    "-i": -I,
    "j": J,
    "-j": -J,
    "k": K,
    "-k": -K,
}


def mul(a: Quaternion, b: Quaternion) -> Quaternion:
    return a * b


def conj(q: Quaternion) -> Quaternion:
    return q.conj()


def inverse(q: Quaternion, tol: Optional[float] = None) -> Quaternion:
    return q.inverse(tol)


def norm(q: Quaternion) -> float:
    return q.norm()


def is_unit(q: Quaternion, tol: Optional[float] = None) -> bool:
    return q.is_unit(tol)


def similar(a: Quaternion, b: Quaternion, tol: Optional[float] = None) -> bool:
    return a.similar(b, tol)
