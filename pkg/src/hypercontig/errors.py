"""Exception hierarchy shared by the engines and the command line."""


class HypercontigError(Exception):
    """Base class; ``exit_code`` is what the CLI returns for it."""

    exit_code = 1


class ParseError(HypercontigError, ValueError):
    exit_code = 2

    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class UnknownIdentifierError(ParseError):
    pass


class PoleError(HypercontigError, ZeroDivisionError):
    """A denominator vanishes at a specialization."""

    exit_code = 3

    def __init__(self, message, denominator=None):
        self.denominator = denominator
        super().__init__(message)


class InadmissibleError(HypercontigError, ValueError):
    """Parameter point unusable for a numeric or series check."""

    exit_code = 3


class DegenerateRelationError(HypercontigError, ArithmeticError):
    pass


class VerificationError(HypercontigError, AssertionError):
    exit_code = 1


class InvalidRecurrenceError(HypercontigError, ValueError):
    """A recurrence coefficient that must be nonzero is identically zero."""

    exit_code = 2
