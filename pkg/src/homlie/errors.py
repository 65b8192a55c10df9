"""Exception types shared across the package."""


class HomLieError(Exception):
    """Base class for every error raised by homlie."""


class DimensionError(HomLieError, ValueError):
    """Operands have incompatible sizes."""


class SpecError(HomLieError, ValueError):
    """An algebra definition violates a structural invariant."""


class PreconditionError(HomLieError):
    """An operation was called on input outside its domain.

    ``witness`` names the offending basis elements or subspace when there is one.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ProlongationError(HomLieError):
    """The tensor window or degree bound is too small for the requested prolongation."""


class ParseError(HomLieError, ValueError):
    """Syntax or reference error in an algebra file, with its location."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column
        self.reason = message
