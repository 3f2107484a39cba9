"""Exception hierarchy shared by all diagcomp modules."""


class DiagcompError(Exception):
    """Base class for every error raised by this package."""


class FieldMismatch(DiagcompError):
    """Operands (or matrix/polynomial pairs) belong to different fields."""


class DivisionByZero(DiagcompError, ZeroDivisionError):
    """Multiplicative inverse of the zero element was requested."""


class InvalidArgument(DiagcompError, ValueError):
    """A scalar argument is outside its documented range."""


class DimensionMismatch(DiagcompError, ValueError):
    """Vector or matrix sizes are incompatible."""


class TraceMismatch(DiagcompError):
    """The prescribed diagonal does not sum to minus the subleading coefficient.

    ``residual`` holds d_1 + ... + d_n + c_{n-1}, which is zero exactly
    when the constraint is satisfied.
    """

    def __init__(self, residual):
        self.residual = residual
        super().__init__(
            f"diagonal violates the trace constraint (residual {residual})"
        )


class BudgetExceeded(DiagcompError):
    """An exhaustive enumeration would exceed the configured candidate budget."""

    def __init__(self, required, budget):
        self.required = required
        self.budget = budget
        super().__init__(
            f"enumeration needs {required} candidates, budget is {budget}"
        )


class WrongField(DiagcompError):
    """The operation is only defined over a different kind of field."""
