"""Exception types shared across the package."""


class OneRelatorError(Exception):
    """Base class for all errors raised by this package."""


class UnknownGenerator(OneRelatorError):
    """A word refers to a generator outside the alphabet in use."""

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.offset = offset


class EmptyRelator(OneRelatorError):
    """The relator freely reduces to the empty word."""


class PreconditionViolated(OneRelatorError):
    """An operation was called outside its stated preconditions."""


class ResourceExhausted(OneRelatorError):
    """A configured budget (depth, word length, subscript span) was hit.

    This is never a verdict: the procedure is total in theory, so running
    out of budget is reported honestly instead of guessing.
    """


class WordSyntaxError(OneRelatorError):
    """Malformed textual input; ``offset`` is the byte position of the error."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset
