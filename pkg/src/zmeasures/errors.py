"""Exception hierarchy shared by all modules.

Parameter/domain/resource problems map to CLI exit code 2, numerical
failures and inconclusive results to exit code 3.
"""


class ZMeasuresError(Exception):
    """Base class for all library errors."""


class ParameterError(ZMeasuresError):
    """A parameter is outside its admissible range (z = 0, theta <= 0, ...)."""


class DomainError(ZMeasuresError):
    """An argument is outside the mathematical domain of the operation."""


class ResourceCapError(ZMeasuresError):
    """A size cap protecting against combinatorial blowup was exceeded."""


class PoleError(ParameterError):
    """Evaluation requested exactly at a pole of the gamma function."""


class UnvalidatedDomainError(ParameterError):
    """Arguments fall outside the validated accuracy domain; refusing to
    return a silently inaccurate value."""


class NumericalError(ZMeasuresError):
    """Quadrature non-convergence or an internal accuracy check failed."""
