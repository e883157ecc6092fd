"""Exception hierarchy shared by all theta_idents modules."""


class ThetaIdentsError(Exception):
    """Base class for every error raised by this package."""


class DomainError(ThetaIdentsError):
    """Input outside the supported domain (Im(tau) <= 0, m outside (0,1), ...)."""


class ConvergenceError(ThetaIdentsError):
    """A q-series hit its term cap before the stopping rule triggered."""


class PoleError(ThetaIdentsError):
    """Evaluation too close to a zero of a denominator theta function."""


class UnboundSymbolError(ThetaIdentsError):
    """A coefficient expression references a symbol missing from the binding."""


class DivisionNearZeroError(ThetaIdentsError):
    """A denominator in a coefficient expression is numerically zero."""


class ConstraintViolation(ThetaIdentsError):
    """A parameter binding breaks the constraints of the identity under test."""


class EmptyParameterSpace(ThetaIdentsError):
    """No parameter binding satisfies the identity's constraints on the given range."""


class ParseError(ThetaIdentsError):
    """Malformed catalog file or expression text."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}" + (
                f", column {column})" if column is not None else ")"
            )
        super().__init__(message)
        self.line = line
        self.column = column


class SchemaError(ThetaIdentsError):
    """Catalog content violates the catalog schema."""

    def __init__(self, message, entry_id=None):
        if entry_id is not None:
            message = f"{message} (entry {entry_id!r})"
        super().__init__(message)
        self.entry_id = entry_id


class UnsupportedFactor(ThetaIdentsError):
    """A factor has no image under the requested derivation map."""
