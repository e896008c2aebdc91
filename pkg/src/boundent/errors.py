"""Exception types raised by boundent."""


class BoundentError(Exception):
    """Base class for all library errors."""


class BadDims(BoundentError, ValueError):
    pass


class NotHermitian(BoundentError, ValueError):
    pass


class NotUnitTrace(BoundentError, ValueError):
    pass


class NotPositive(BoundentError, ValueError):
    pass


class NotNormalized(BoundentError, ValueError):
    pass


class NoConvergence(BoundentError, ArithmeticError):
    """An eigen- or singular-value solver failed to converge."""


class IndexOutOfRange(BoundentError, IndexError):
    pass


class NotPhysical(BoundentError, ValueError):
    """A Bell spectrum has negative weights or does not sum to one."""


class DegenerateChi(BoundentError):
    """The dominant eigenvector is a product state, so A annihilates it."""


class NegativeAlpha(BoundentError, ValueError):
    pass


class EpsOutOfRange(BoundentError, ValueError):
    pass


class BaseNotBoundEntangled(BoundentError, ValueError):
    pass


class ParseError(BoundentError, ValueError):
    pass


class InvalidRange(BoundentError, ValueError):
    pass
