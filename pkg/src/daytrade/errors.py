"""Exception types shared across the package."""


class DayTradeError(Exception):
    """Base class for domain errors raised by this package."""


class ParseError(DayTradeError, ValueError):
    """A quote file row could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(DayTradeError, ValueError):
    """A quote or series violates its invariants."""


class StoreFormatError(DayTradeError, ValueError):
    """A quote store is truncated, corrupted or of an unknown version."""


class RuinError(DayTradeError, ValueError):
    """Leveraged daily loss reaches or exceeds 100% of equity."""
