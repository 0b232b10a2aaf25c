"""Exception hierarchy shared by all cdalg modules."""


class CdalgError(Exception):
    """Base class for all library errors."""


class DimensionMismatchError(CdalgError):
    """An element, matrix or map does not conform to the algebra's dimension."""


class NonUnitalError(CdalgError):
    """The operation needs a distinguished unit but the algebra has none."""


class NotQuadraticError(CdalgError):
    """The algebra fails the squares-are-dependent requirement."""


class NotLocallyComplexError(CdalgError):
    """The algebra is not locally complex, so the requested analysis is undefined."""


class NotAlternativeError(CdalgError):
    """The algebra fails an alternativity precondition."""


class InvalidGradingError(CdalgError):
    """The supplied even/odd split is not a valid superalgebra grading."""


class UnknownAlgebraError(CdalgError):
    """No built-in algebra matches the requested name."""


class UnsupportedRationalClassError(CdalgError):
    """A recognizer needs a unit-norm vector that does not exist over the rationals.

    This happens when the rational quadratic form carried by the input is not
    equivalent to the standard one, e.g. a quaternion table presented with
    i*i = -2.  The algebra may still be isomorphic to the target over the
    reals; only the rational change of basis is missing.
    """


class InconsistentInputError(CdalgError):
    """Verified preconditions contradict each other; the input data is broken."""


class MalformedInputError(CdalgError):
    """A file or expression could not be parsed."""
