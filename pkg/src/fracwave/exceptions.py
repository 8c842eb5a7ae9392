class NumericalSetupError(ArithmeticError):
    """Base class for failures that make a run impossible to set up."""


class DomainError(NumericalSetupError, ValueError):
    pass


class DegenerateSystemError(NumericalSetupError):
    """Starting-weight system is (numerically) singular."""


class SingularDeconvolutionError(NumericalSetupError):
    """Leading coefficient of the divisor series vanishes."""


class SingularSystemError(NumericalSetupError):
    """A tiny pivot was met while eliminating a tridiagonal system."""
