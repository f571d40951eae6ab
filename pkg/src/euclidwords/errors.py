"""Shared exception types."""


class BudgetError(Exception):
    """An enumeration or scan would exceed its hard resource cap."""


class InvalidPairError(ValueError):
    """Arguments were expected to be a coprime pair of positive integers."""
