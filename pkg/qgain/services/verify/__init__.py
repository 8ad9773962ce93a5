"""
Verification: cross-checks between determinant routes and the lemma suite.
"""

from .cross_check import cross_check
from .lemmas import DeterminantBackend, LemmaSuite, run_lemma_suite
from .oracle import balance_oracle

__all__ = [
    "DeterminantBackend",
    "LemmaSuite",
    "balance_oracle",
    "cross_check",
    "run_lemma_suite",
]
