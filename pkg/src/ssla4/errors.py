"""Exception types shared across the package."""


class SSLError(Exception):
    """Base class for all errors raised by ssla4."""


class InvalidArgument(SSLError, ValueError):
    pass


class DivideByZero(SSLError, ZeroDivisionError):
    pass


class NotAUnit(SSLError, ValueError):
    pass


class ZeroVector(SSLError, ValueError):
    pass


class InvalidNorm(SSLError, ValueError):
    pass


class NotInOrder(SSLError, ValueError):
    pass


class NotASubmodule(SSLError, ValueError):
    pass


class NotRationalMap(SSLError, ValueError):
    pass


class NoInnerWitness(SSLError, RuntimeError):
    pass


class InternalError(SSLError, RuntimeError):
    pass


class BudgetExceeded(SSLError):
    """Raised when a request exceeds the configured work budget.

    ``info`` carries the estimate that triggered the refusal and how much
    work had been done before stopping.
    """

    def __init__(self, message, **info):
        super().__init__(message)
        self.info = info
