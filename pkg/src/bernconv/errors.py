"""Exception types shared across the library."""


class BernconvError(Exception):
    """Base class for all library errors."""


class DomainError(BernconvError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ParseError(BernconvError, ValueError):
    """A textual or binary input cannot be parsed."""


class ConvergenceError(BernconvError, RuntimeError):
    """An iterative solver failed to reach its tolerance."""

    def __init__(self, message, residual=None, iterations=None):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations


class ResourceError(BernconvError, RuntimeError):
    """A request would exceed the configured memory or size guards."""


class FieldColumnError(BernconvError, RuntimeError):
    """A density-field column failed to compute.

    Carries the column index and parameter so a long sweep can be diagnosed
    without losing the information of which column aborted it.
    """

    def __init__(self, message, column, t, completed=0):
        super().__init__(message)
        self.column = column
        self.t = t
        self.completed = completed
