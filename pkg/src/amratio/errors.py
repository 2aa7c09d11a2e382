"""Exception hierarchy shared across the package."""


class AmRatioError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(AmRatioError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ParameterError(AmRatioError, ValueError):
    """Invalid distribution / Fox-H parameters at construction time."""


class PoleError(AmRatioError, ValueError):
    """Evaluation requested exactly at a gamma-function pole."""


class ContourError(AmRatioError, ValueError):
    """No vertical contour separates the two gamma pole families."""


class NonConvergenceError(AmRatioError, ArithmeticError):
    """An iterative evaluation hit its budget before meeting tolerance."""


class DivergenceError(AmRatioError, ArithmeticError):
    """A series shows growing terms (outside its convergence domain)."""


class NumericalError(AmRatioError, ArithmeticError):
    """A computed value violates a sanity bound beyond numerical slack."""
