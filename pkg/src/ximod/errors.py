"""Exception hierarchy shared by every ximod component."""


class AlgebraError(Exception):
    """Base class for all errors raised by this package."""


class TagMismatch(AlgebraError):
    """Operands belong to different coefficient fields."""


class DivisionByZero(AlgebraError, ZeroDivisionError):
    """Division or inversion of a zero element."""


class BothZero(AlgebraError):
    """gcd requested for two zero polynomials."""


class NonSquare(AlgebraError):
    """A square matrix was required."""


class ZeroPolynomial(AlgebraError):
    """The zero polynomial is not admissible here."""


class FactorizationIncomplete(AlgebraError):
    """A factor of degree >= 2 could not be certified irreducible or split.

    Callers are expected to fall back to invariant factors only.  The
    offending monic factor is available as ``remainder``.
    """

    def __init__(self, remainder, message=None):
        self.remainder = remainder
        super().__init__(message or f"cannot decide irreducibility of {remainder}")


class NotMonic(AlgebraError):
    """A monic polynomial was required."""


class ConstantPolynomial(AlgebraError):
    """A polynomial of degree >= 1 was required."""


class NoSolution(AlgebraError):
    """The linear system is inconsistent."""


class DimensionMismatch(AlgebraError):
    """Vector or matrix dimensions do not agree."""


class InconsistentAction(AlgebraError):
    """The supplied action oracle is not a polynomial module action."""


class ZeroVector(AlgebraError):
    """A nonzero vector was required."""


class WrongKind(AlgebraError):
    """The operation is not defined for this tensor kind."""


class UnknownDemo(AlgebraError):
    """No demo with the requested name exists."""


class ExpressionSyntaxError(AlgebraError):
    """Malformed expression text; carries the 1-based error position."""

    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class BudgetExceeded(AlgebraError):
    """The closure search hit its state budget before finishing."""


class InputValidationError(AlgebraError):
    """A JSON payload failed validation; carries the offending path."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")


class SelfCheckFailed(AlgebraError):
    """An internal consistency check failed after computation."""
