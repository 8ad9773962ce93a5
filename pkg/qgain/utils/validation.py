"""
Validation utilities for graph input data.
"""

import logging
from typing import List, Optional, Sequence, Tuple, Union

from ..core.exceptions import NonUnitGainError
from ..core.models.quaternion import Quaternion

logger = logging.getLogger(__name__)


class ValidationUtils:
    """Validation utilities for gains and labels."""

    @staticmethod
    def normalize_gain(
        value: Union[str, Sequence[float], Quaternion],
        tol: float,
        renormalize_tol: float,
        edge_id: Optional[str] = None,
    ) -> Tuple[Quaternion, bool]:
        """
        Turn a document gain into a unit quaternion.

        Args:
            value: Unit token or [w, x, y, z]
            tol: Unit-norm tolerance accepted as is
            renormalize_tol: Larger deviation that is renormalized with a warning

        Returns:
            Tuple of (unit gain, was_renormalized)

        Raises:
            NonUnitGainError: when | |q| - 1 | exceeds renormalize_tol
        """
        gain = Quaternion.coerce(value)
        deviation = abs(gain.norm() - 1.0)
        if deviation <= tol:
            return gain, False
        if deviation <= max(renormalize_tol, tol):
            logger.warning(f"Renormalizing gain of edge {edge_id or '?'}: |q| - 1 = {deviation:.3e}")
            return gain / gain.norm(), True
        raise NonUnitGainError(
            f"Gain of edge {edge_id or '?'} is not a unit quaternion: |q| = {gain.norm():.9g}"
        )

    @staticmethod
    def find_duplicates(items: Sequence[str]) -> List[str]:
        """
        Report repeated labels.

        Args:
            items: Labels to check

        Returns:
            Sorted list of labels that appear more than once
        """
        seen = set()
        repeated = set()
        for item in items:
            if item in seen:
                repeated.add(item)
            seen.add(item)
        return sorted(repeated)
