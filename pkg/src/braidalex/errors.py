"""Exception hierarchy shared by all modules."""


class BraidAlexanderError(Exception):
    """Base class for every error raised by this package."""


class InputError(BraidAlexanderError, ValueError):
    """Malformed user input (braid words, flags)."""


class ParseError(InputError):
    def __init__(self, message, token=None, position=None):
        super().__init__(message)
        self.token = token
        self.position = position


class IndexOutOfRange(InputError):
    def __init__(self, message, token=None, position=None):
        super().__init__(message)
        self.token = token
        self.position = position


class NotDivisible(BraidAlexanderError, ArithmeticError):
    """Exact division left a nonzero remainder."""


class DivisorZero(BraidAlexanderError, ZeroDivisionError):
    pass


class NotSquare(BraidAlexanderError, ValueError):
    pass


class DivisibilityFailure(BraidAlexanderError, RuntimeError):
    """A division that must be exact by theory was not.

    This always indicates a bug in the pipeline, never bad input.
    """


class OracleMismatch(BraidAlexanderError, RuntimeError):
    """The Fox-calculus oracle disagrees with the Burau pipeline."""
