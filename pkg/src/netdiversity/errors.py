"""Exception types raised across the package."""


class NetDiversityError(Exception):
    """Base class for all package errors."""


class ParseError(NetDiversityError, ValueError):
    """A malformed input row. ``line`` is 1-based."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(NetDiversityError, ValueError):
    pass


class NodeLookupError(NetDiversityError, KeyError):
    def __str__(self):
        return f"unknown node: {self.args[0]!r}"


class DegenerateInputError(NetDiversityError, ValueError):
    """Statistic undefined for the given data.

    ``reason`` is one of ``"insufficient-pairs"`` or ``"zero-variance"``.
    """

    def __init__(self, reason, n_used):
        self.reason = reason
        self.n_used = n_used
        super().__init__(f"{reason} (n_used={n_used})")


class GraphTooLargeError(NetDiversityError, ValueError):
    pass


class DegenerateNodeError(NetDiversityError, ValueError):
    """A node has no outgoing weight to normalize."""
