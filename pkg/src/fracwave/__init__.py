"""Second-order finite difference schemes for the time-fractional diffusion-wave equation."""

__version__ = "0.1.0"

from .exceptions import (
    DegenerateSystemError,
    DomainError,
    NumericalSetupError,
    SingularDeconvolutionError,
    SingularSystemError,
)
from .problems import ManufacturedProblem, ProblemSpec, example1, example2, get_problem
from .solver import Discretization, Scheme, SolutionHistory, error_norms, l2_error, march, solve

__all__ = [
    "__version__",
    "DegenerateSystemError",
    "DomainError",
    "NumericalSetupError",
    "SingularDeconvolutionError",
    "SingularSystemError",
    "ManufacturedProblem",
    "ProblemSpec",
    "example1",
    "example2",
    "get_problem",
    "Discretization",
    "Scheme",
    "SolutionHistory",
    "error_norms",
    "l2_error",
    "march",
    "solve",
]
