"""
Enumeration limit exceptions.
"""


class LimitExceededError(Exception):
    """Base exception for configured caps and budgets."""
    pass


class SizeCapExceededError(LimitExceededError):
    """Exception raised when a matrix is larger than the permutation-sum size cap."""
    pass


class BudgetExceededError(LimitExceededError):
    """Exception raised when an enumeration would exceed its budget."""
    pass
