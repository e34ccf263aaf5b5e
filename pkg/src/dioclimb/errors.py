"""Exception hierarchy shared by every dioclimb module."""


class DiophantineError(ValueError):
    """Base class for all invalid-input conditions raised by dioclimb."""


class EmptyEquationError(DiophantineError):
    pass


class LengthMismatchError(DiophantineError):
    pass


class NonPositivePowerError(DiophantineError):
    pass


class NonPositiveCoefficientError(DiophantineError):
    """A coefficient <= 0 was handed to the climber or the oracle.

    Both rely on every term growing strictly with its variable.
    """


class DimensionMismatchError(DiophantineError):
    pass


class IndexOutOfRangeError(DiophantineError, IndexError):
    pass


class EquationSyntaxError(DiophantineError):
    """Malformed equation text. ``position`` is the 0-based column of the problem."""

    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        super().__init__(f"{message} at column {position + 1}: {text!r}")


class DuplicateVariableError(DiophantineError):
    pass


class MissingVariableError(DiophantineError):
    pass


class NonPositiveBudgetError(DiophantineError):
    pass


class BoundsTooLargeError(DiophantineError):
    """The oracle's lattice volume estimate exceeds its configured ceiling."""
