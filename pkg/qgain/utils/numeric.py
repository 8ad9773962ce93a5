"""
Numeric helpers: compensated accumulation and locale-independent formatting.
"""

from typing import List, Sequence, Tuple


class CompensatedSum:
    """
    Neumaier-compensated running sum over quaternion components.

    Terms are added in the caller's order, so a fixed enumeration order gives
    bit-identical results.
    """

    __slots__ = ("_sums", "_compensations")

    def __init__(self, width: int = 4) -> None:
        self._sums: List[float] = [0.0] * width
        self._compensations: List[float] = [0.0] * width

    def add(self, values: Sequence[float], sign: int = 1) -> None:
        sums = self._sums
        comps = self._compensations
        for index, raw in enumerate(values):
            value = raw if sign > 0 else -raw
            total = sums[index] + value
            if abs(sums[index]) >= abs(value):
                comps[index] += (sums[index] - total) + value
            else:
                comps[index] += (value - total) + sums[index]
            sums[index] = total

    def merge(self, other: "CompensatedSum") -> None:
        """Fold another partial sum into this one."""
        self.add(other._sums)
        self.add(other._compensations)

    def result(self) -> Tuple[float, ...]:
        return tuple(s + c for s, c in zip(self._sums, self._compensations))


def format_real(value: float, decimals: int = 12) -> str:
    """
    Fixed-point text with trailing zeros stripped.

    9 - 4*sqrt(2) renders as "3.343145750508"; values that round to zero render as "0".
    """
    text = f"{value:.{decimals}f}"
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    if text in ("-0", ""):
        text = "0"
    return text


def format_significant(value: float, digits: int = 12) -> str:
    """Shortest text with at most `digits` significant digits; 3e-14 stays "3e-14"."""
    text = f"{value:.{digits}g}"
    return "0" if text in ("-0", "0") else text
