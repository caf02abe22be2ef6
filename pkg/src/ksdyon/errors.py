"""Exception hierarchy shared by every module."""


class KSDyonError(Exception):
    """Base class for all errors raised by ksdyon."""


class InvalidParameterError(KSDyonError, ValueError):
    """A function parameter lies outside its admissible range."""


class InvalidQuantumNumbersError(InvalidParameterError):
    """A quantum-number tuple violates its admissibility rules."""


class DegenerateOriginError(KSDyonError, ValueError):
    """Angle-type coordinates are undefined at the origin."""


class OriginSingularityError(KSDyonError, ValueError):
    """The monopole potential is singular at the origin."""


class StringSingularityError(KSDyonError, ValueError):
    """The point lies on (or numerically next to) the Dirac string."""


class PoleDivergenceError(KSDyonError, ArithmeticError):
    """A closed-form branch diverges or is not normalizable."""


class GridResolutionError(KSDyonError, RuntimeError):
    """Richardson error estimate exceeds the requested tolerance."""
