"""Exception types raised by radiuslab operations."""


class RadiusLabError(Exception):
    """Base class for all radiuslab errors."""


class NonFiniteError(RadiusLabError):
    """A matrix contains NaN or infinite entries."""


class NotSquareError(RadiusLabError):
    """An operation requiring a square matrix received a rectangular one."""


class NotHermitianError(RadiusLabError):
    """The Hermitian symmetry check failed beyond tolerance."""


class NotPSDError(RadiusLabError):
    """A matrix required to be positive semidefinite has an eigenvalue below
    the clamping threshold."""


class DimensionMismatchError(RadiusLabError):
    """Two operands do not have compatible shapes."""


class BadExponentError(RadiusLabError):
    """An exponent parameter is outside its admissible range."""


class BadSpecError(RadiusLabError):
    """An ensemble or run specification is invalid."""


class FGProductViolationError(RadiusLabError):
    """The scalar maps f, g do not satisfy f(t)*g(t) = t on the spectrum."""


class UnknownLemmaError(RadiusLabError):
    """check_lemma received an identifier it does not know."""


class UnknownBoundError(RadiusLabError):
    """A bound identifier is not present in the catalog."""


class IncomparableBoundsError(RadiusLabError):
    """Two bounds asked to be compared do not upper-bound the same quantity."""


class MatrixParseError(RadiusLabError):
    """A matrix file does not follow the JSON matrix format."""
