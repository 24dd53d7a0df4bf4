"""Shared exception types."""


class DomainError(ValueError):
    """An operation was applied outside its stated domain."""


class RangeError(ValueError):
    """An integer input exceeds the supported range (indices must stay below 2^32)."""
