"""Exception hierarchy. Every domain error carries its class name as the
error tag reported by the command-line front end."""


class TableauError(Exception):
    """Base class for domain errors raised by this package."""

    @property
    def tag(self) -> str:
        return type(self).__name__


class CovarianceViolation(TableauError):
    pass


class LengthMismatch(TableauError):
    pass


class SignatureMismatch(TableauError):
    pass


class NotComparable(TableauError):
    pass


class ShapeMismatch(TableauError):
    pass


class NotQuasistandard(TableauError):
    pass


class NotOuterCorner(TableauError):
    pass


class BudgetExceeded(TableauError):
    pass


class InconsistentSystem(TableauError):
    pass


class IndexOutOfRange(TableauError):
    pass


class PreconditionViolation(TableauError):
    pass
