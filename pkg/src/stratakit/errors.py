"""Exception hierarchy shared by all stratakit modules."""


class StrataError(Exception):
    """Base class for every error raised by stratakit."""


class ValidationError(StrataError, ValueError):
    """An eigenstructure violates a realizability invariant."""


class SizeMismatch(ValidationError):
    pass


class IndexSumViolation(ValidationError):
    pass


class GeometricMultiplicityViolation(ValidationError):
    pass


class InvalidInput(StrataError, ValueError):
    pass


class InvalidMap(StrataError, ValueError):
    """A coalescence map does not partition the eigenvalues or is not injective."""


class IncomparableKeys(StrataError, ValueError):
    """Symbolic and concrete eigenvalues cannot be matched in an orbit query."""


class BudgetExceeded(StrataError):
    pass


class InputDegreeExceedsGrade(StrataError, ValueError):
    pass


class GradeZero(StrataError, ValueError):
    pass


class InvalidAssignment(StrataError, ValueError):
    pass


class Unsupported(StrataError):
    """No implemented construction realizes the requested eigenstructure."""
