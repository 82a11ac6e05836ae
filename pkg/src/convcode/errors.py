"""Exception hierarchy shared by every module."""


class ConvCodeError(Exception):
    """Base class for all errors raised by this package."""


class FieldError(ConvCodeError, ValueError):
    """Invalid field parameters, or mixing elements of different fields."""


class ParseError(ConvCodeError, ValueError):
    """Malformed polynomial text or encoder file."""


class PreconditionError(ConvCodeError, ValueError):
    """An operation was called on an input outside its domain."""


class NotBasicError(PreconditionError):
    pass


class NotReducedError(PreconditionError):
    pass


class RankDeficientError(PreconditionError):
    pass


class NotInCodeError(PreconditionError):
    pass


class NotPolynomialError(PreconditionError):
    """A z-monomial transformation left the polynomial ring."""


class BudgetExceededError(ConvCodeError, RuntimeError):
    """An exhaustive search would exceed its configured budget."""
