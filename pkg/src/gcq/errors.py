"""Exception hierarchy shared by every gcq module."""


class GCQError(Exception):
    """Base class for all errors raised by gcq."""


class NotPrimePower(GCQError, ValueError):
    pass


class Overflow(GCQError, ValueError):
    pass


class FieldMismatch(GCQError, TypeError):
    pass


class ZeroInverse(GCQError, ZeroDivisionError):
    pass


class DivisionByZeroPoly(GCQError, ZeroDivisionError):
    pass


class BothZero(GCQError, ValueError):
    pass


class WindowTooSmall(GCQError, ValueError):
    pass


class BadPeriod(GCQError, ValueError):
    pass


class ZeroPolynomial(GCQError, ValueError):
    pass


class ZeroSequence(GCQError, ValueError):
    pass


class BoundTooSmall(GCQError, ValueError):
    pass


class BudgetExceeded(GCQError, ValueError):
    pass


class BadElement(GCQError, ValueError):
    pass


class EmptyInput(GCQError, ValueError):
    pass
