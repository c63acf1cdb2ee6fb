"""Exception types shared across the package."""


class InvalidArgument(ValueError):
    """Input violates an operation's precondition."""


class ExtractionError(ValueError):
    """A numeric value could not be matched to a unique root of unity."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class ResourceLimitError(RuntimeError):
    """An exhaustive search was refused because the input exceeds its limits."""
