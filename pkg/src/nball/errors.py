"""Exception types shared across the package."""


class NBallError(Exception):
    """Base class for all errors raised by :mod:`nball`."""


class DomainError(NBallError, ValueError):
    """An argument lies outside the domain where an operation is defined."""


class UnsupportedExpression(NBallError):
    """A distribution expression has no implemented rule for the request."""


class NotExact(NBallError, ArithmeticError):
    """A quantity cannot be represented in the exact scalar ring."""


class ConvergenceError(NBallError, RuntimeError):
    """Numerical tolerance was not met; ``best`` holds the best estimate."""

    def __init__(self, message, best=None, diagnostics=None):
        super().__init__(message)
        self.best = best
        self.diagnostics = diagnostics or {}
