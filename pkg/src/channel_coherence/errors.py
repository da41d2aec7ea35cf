"""Exception hierarchy.

``InputError`` subclasses mean the caller passed something outside an
operation's domain (CLI exit code 2). ``DomainError`` subclasses mean the
inputs were well-formed but the requested quantity does not exist or could
not be computed (CLI exit code 3).
"""


class CoherenceError(Exception):
    """Base class for all package errors."""


class InputError(CoherenceError, ValueError):
    """Invalid argument or malformed input."""


class DomainError(CoherenceError, ArithmeticError):
    """Numerical or physical domain failure."""


class DegenerateCubic(InputError):
    """Leading cubic coefficient is zero."""


class PoleAtZero(InputError):
    """coth evaluated at its pole."""


class OutOfRange(InputError):
    """Degree of coherence outside [0, 1]."""


class NonConvergence(DomainError):
    """Quadrature exhausted its evaluation budget."""


class NotBistable(DomainError):
    """Potential parameters do not give two distinct minima."""


class DegenerateDenominator(DomainError):
    """Spectral temperature normalization factor vanishes."""
