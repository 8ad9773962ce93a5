"""
Tests for utility functions.
"""

import math

import pytest

from qgain.core.exceptions import NonUnitGainError
from qgain.core.models import J, Quaternion
from qgain.utils.numeric import CompensatedSum, format_real, format_significant
from qgain.utils.validation import ValidationUtils


class TestCompensatedSum:
    """Test compensated accumulation."""

    def test_cancellation(self):
        """Test small terms survive cancellation of large ones."""
        total = CompensatedSum(width=1)
        for value in (1e16, 1.0, -1e16, 1.0):
            total.add((value,))
        assert total.result() == (2.0,)

    def test_sign(self):
        """Test negative signs subtract whole quaternions."""
        total = CompensatedSum()
        total.add((1.0, 2.0, 3.0, 4.0))
        total.add((1.0, 1.0, 1.0, 1.0), -1)
        assert total.result() == (0.0, 1.0, 2.0, 3.0)

    def test_merge(self):
        """Test merging partial sums."""
        left, right = CompensatedSum(width=1), CompensatedSum(width=1)
        left.add((0.1,))
        right.add((0.2,))
        left.merge(right)
        assert left.result()[0] == pytest.approx(0.3, abs=1e-16)

    def test_matches_fsum(self):
        """Test agreement with math.fsum on an ill-conditioned series."""
        values = [(-1) ** k * 10.0 ** (k % 7) / (k + 1) for k in range(200)]
        total = CompensatedSum(width=1)
        for value in values:
            total.add((value,))
        assert total.result()[0] == pytest.approx(math.fsum(values), abs=1e-12)


class TestFormatReal:
    """Test fixed-point formatting."""

    @pytest.mark.parametrize(
        "value, expected",
        [
            (9 - 4 * math.sqrt(2), "3.343145750508"),
            (2.0, "2"),
            (0.5, "0.5"),
            (-1e-15, "0"),
            (0.0, "0"),
            (-0.25, "-0.25"),
        ],
    )
    def test_values(self, value, expected):
        """Test trailing zeros are stripped and tiny values print as 0."""
        assert format_real(value) == expected

    def test_decimals(self):
        """Test the decimal count is honoured."""
        assert format_real(math.pi, 3) == "3.142"


class TestFormatSignificant:
    """Test significant-digit formatting."""

    @pytest.mark.parametrize(
        "value, expected",
        [
            (3e-14, "3e-14"),
            (-2.5e-13, "-2.5e-13"),
            (1.0 / 3.0, "0.333333333333"),
            (0.0, "0"),
            (-0.0, "0"),
        ],
    )
    def test_values(self, value, expected):
        """Test tiny discrepancies keep their magnitude."""
        assert format_significant(value) == expected


class TestValidationUtils:
    """Test gain normalization and duplicate detection."""

    def test_token(self):
        """Test tokens become exact units."""
        assert ValidationUtils.normalize_gain("j", 1e-9, 1e-6) == (J, False)

    def test_exact_unit(self):
        """Test a unit array passes unchanged."""
        gain, renormalized = ValidationUtils.normalize_gain([0.5, 0.5, 0.5, 0.5], 1e-9, 1e-6)
        assert gain == Quaternion(0.5, 0.5, 0.5, 0.5)
        assert not renormalized

    def test_renormalized(self):
        """Test a slightly long gain is rescaled."""
        gain, renormalized = ValidationUtils.normalize_gain([1.0000001, 0.0, 0.0, 0.0], 1e-9, 1e-6, "e1")
        assert renormalized
        assert gain.is_unit(1e-15)

    def test_rejected(self):
        """Test gains far from unit norm are rejected."""
        with pytest.raises(NonUnitGainError, match="e7"):
            ValidationUtils.normalize_gain([2.0, 0.0, 0.0, 0.0], 1e-9, 1e-6, "e7")

    def test_find_duplicates(self):
        """Test repeated labels are reported once, sorted."""
        assert ValidationUtils.find_duplicates(["b", "a", "b", "c", "a", "b"]) == ["a", "b"]
        assert ValidationUtils.find_duplicates([]) == []
