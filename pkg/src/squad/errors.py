"""Exception types shared across the package."""


class CapacityError(ValueError):
    """Raised when an instance exceeds a fixed size limit (64 vertices, 3^n scans...)."""


class PreconditionError(ValueError):
    """Raised when an operation's input hypotheses do not hold.

    ``reason`` is a short machine-readable tag such as ``"min_degree"``.
    """

    def __init__(self, reason, message):
        super().__init__(message)
        self.reason = reason


class GraphFormatError(ValueError):
    """Malformed graph or matrix text. ``line`` is 1-based, or None."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
