"""Exception types shared across the package."""


class AlphaError(Exception):
    """Base class for all package errors."""


class DomainError(AlphaError, ValueError):
    """An argument lies outside the domain of the requested map."""


class PrecisionError(AlphaError):
    """An enclosure is too wide to determine the requested decimal digits."""

    def __init__(self, message, digit_index=None):
        super().__init__(message)
        self.digit_index = digit_index


class UsageError(AlphaError, ValueError):
    """Malformed call: wrong lengths, unknown identifiers and the like."""
