"""Shared exception types."""


class HilbembError(Exception):
    """Base class for errors raised by this package."""


class BudgetExceeded(HilbembError):
    """An exhaustive enumeration outgrew its configured budget."""


class ParseError(HilbembError):
    """Malformed input file or expression; message names the offending field."""


class PreconditionError(HilbembError):
    """A documented precondition of an operation does not hold for the input."""


class VerificationError(HilbembError):
    """An internal identity that should hold by construction failed.

    Raised loudly instead of returning wrong data; indicates a bug or an
    input outside the supported class.
    """
