"""Shared exception types."""


class CapacityError(Exception):
    """A requested computation exceeds the configured size budget."""


class ConsistencyError(Exception):
    """An internal invariant failed (non-integral multiplicity, bad character)."""


class UnsupportedError(Exception):
    """The requested parameter lies outside the supported closed-form range."""
