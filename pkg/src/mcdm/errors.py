"""Exception hierarchy shared across the package.

The CLI maps the four top-level families (parse, validation, convergence,
inconsistent judgments) onto distinct exit codes.
"""


class MCDMError(Exception):
    """Base class for every error raised by this package."""


class ParseError(MCDMError):
    """Malformed input file or argument.

    ``location`` names the offending line/row/field when it is known.
    """

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class ValidationError(MCDMError, ValueError):
    """A value violates an invariant of one of the domain types."""


class NonPositiveValue(ValidationError):
    pass


class WeightSumError(ValidationError):
    pass


class DuplicateLabel(ValidationError):
    pass


class EmptyMatrix(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class LambdaOutOfRange(ValidationError):
    pass


class ScaleViolation(ValidationError):
    pass


class MissingComparison(ValidationError):
    pass


class DuplicateComparison(ValidationError):
    pass


class OrderOutOfRange(ValidationError):
    pass


class MissingProblem(ValidationError):
    pass


class MissingSection(ValidationError):
    pass


class ZeroGoalColumn(ValidationError):
    """The goal column of the limit supermatrix carries no weight on the alternatives."""


class SchemeMismatch(ValidationError):
    """A score matrix produced by one normalization scheme was handed to a method expecting another."""


class UnknownMethod(MCDMError, ValueError):
    pass


class NoConvergence(MCDMError, ArithmeticError):
    pass


class InconsistentJudgments(MCDMError):
    """Consistency ratio above 0.1 while strict mode is on."""
