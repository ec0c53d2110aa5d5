"""Exception hierarchy shared by every module."""


class RSEntropyError(ValueError):
    """Base class for all input and domain errors raised by the package."""


class DomainError(RSEntropyError):
    pass


class NegativeWeight(RSEntropyError):
    pass


class ZeroWeightForbidden(RSEntropyError):
    pass


class SumOutOfTolerance(RSEntropyError):
    pass


class LengthMismatch(RSEntropyError):
    pass


class DimMismatch(RSEntropyError):
    pass


class NotHermitian(RSEntropyError):
    pass


class NoConvergence(RSEntropyError):
    pass


class NegativeEigenvalue(RSEntropyError):
    pass


class SingularNegativePower(RSEntropyError):
    pass


class NonRealTrace(RSEntropyError):
    pass


class DimFactorizationMismatch(RSEntropyError):
    pass


class NotPositiveSemidefinite(RSEntropyError):
    pass


class TraceNotOne(RSEntropyError):
    pass


class SigmaSingularForExtendedR(RSEntropyError):
    pass


class CompletenessViolation(RSEntropyError):
    pass


class ShapeMismatch(RSEntropyError):
    pass


class NotUnitary(RSEntropyError):
    pass


class UnknownSuite(RSEntropyError):
    pass
