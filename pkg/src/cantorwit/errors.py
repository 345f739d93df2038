"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for every error raised by this package."""


class ArityMismatchError(ToolkitError):
    """Operands live over different alphabets, or a symbol is out of range."""


class ParseError(ToolkitError):
    """A literal could not be parsed; carries the offending position."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class PreconditionError(ToolkitError):
    """An operation was invoked outside its domain of validity."""


class VerificationError(ToolkitError):
    """A certificate failed to re-evaluate to its claimed target."""
