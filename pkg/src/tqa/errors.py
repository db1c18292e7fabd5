"""Exception types shared across the package."""


class TQAError(Exception):
    """Base class for all package errors."""


class QuiverError(TQAError, ValueError):
    """Invalid quiver data or path."""


class QuiverSyntaxError(QuiverError):
    """Malformed quiver description, with a 1-based line and column."""

    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class ResourceLimitError(TQAError, RuntimeError):
    """An enumeration exceeded its configured cap."""


class NotACocycleError(TQAError, ValueError):
    """A cochain passed as a cohomology class is not closed."""
