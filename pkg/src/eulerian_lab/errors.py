"""Exceptions shared across the package."""

from __future__ import annotations


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration would exceed the configured work budget.

    The default budgets are deliberately conservative; set the environment
    variable ``EULERIAN_LAB_BUDGET`` to a larger integer to raise them.
    """


class CertificationError(AssertionError):
    """Raised when a certified mathematical identity fails to hold.

    This signals a genuine internal contradiction (two routes to the same
    quantity disagree), never a user input problem.
    """
