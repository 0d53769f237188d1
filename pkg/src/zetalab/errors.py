"""Exception hierarchy shared by every zetalab module."""


class ZetaLabError(Exception):
    """Base class for all errors raised by zetalab."""


class DimensionError(ZetaLabError, ValueError):
    """Vectors of different dimension were combined."""


class IsotropicVectorError(ZetaLabError, ArithmeticError):
    """A vector with zero bilinear length was used where a length is divided by."""


class PoleError(ZetaLabError, ArithmeticError):
    """Evaluation requested at a pole."""


class DomainError(ZetaLabError, ValueError):
    """Argument lies outside the domain of the chosen method."""


class ConvergenceError(ZetaLabError, ArithmeticError):
    """The requested accuracy could not be met within the term or depth budget."""


class DegenerateRegionError(ZetaLabError, ArithmeticError):
    """A region (or formal quotient) has zero area / vanishing denominator."""
