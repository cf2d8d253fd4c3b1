"""Exception hierarchy shared by every module."""


class AmubError(ValueError):
    """Base class for rejected inputs."""


class NotPrime(AmubError):
    pass


class NotPrimePower(AmubError):
    pass


class TooLarge(AmubError):
    pass


class TooSmall(AmubError):
    pass


class ZeroArgument(AmubError):
    pass


class TrivialCharacter(AmubError):
    pass


class OrderMismatch(AmubError):
    pass


class EmptyFamily(AmubError):
    pass


class BadOrder(AmubError):
    pass


class NotHadamard(AmubError):
    pass


class NotHadamardInput(NotHadamard):
    pass


class BadPrime(AmubError):
    pass


class SingularCurve(AmubError):
    pass


class BadDegreeRange(AmubError):
    pass


class PointNotOnCurve(AmubError):
    pass


class DimensionMismatch(AmubError):
    pass


class FieldMismatch(AmubError):
    pass


class SingleBasis(AmubError):
    pass


class NotOrthonormal(AmubError):
    pass


class BadParameters(AmubError):
    pass


class TooFewVectors(AmubError):
    pass


class AlreadyReal(AmubError):
    pass


class BadRange(AmubError):
    pass


class BundleFormatError(AmubError):
    """Malformed or inconsistent bundle file."""


class BoundViolated(RuntimeError):
    """A proven bound failed numerically; indicates a bug, not bad input."""
