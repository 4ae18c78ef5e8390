"""Shared exception types."""


class DomainError(ValueError):
    """An input is outside the mathematical domain of an operation."""


class ResourceLimitError(RuntimeError):
    """A computation was refused because it exceeds a configured guard."""
