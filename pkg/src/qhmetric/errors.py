"""Exception hierarchy shared by every module of the package."""


class QHMetricError(Exception):
    """Base class for all errors raised by qhmetric."""


class DimensionError(QHMetricError, ValueError):
    """Shapes of the supplied matrices or vectors do not agree."""


class PreconditionError(QHMetricError, ValueError):
    """An input violates a structural precondition (e.g. is not Hermitian)."""


class DomainError(QHMetricError, ValueError):
    """A scalar parameter lies outside its admissible range."""


class InvertibilityError(QHMetricError, ValueError):
    """A matrix that has to be inverted is numerically singular."""


class TrivialityError(QHMetricError, ValueError):
    """The supplied observable imposes no constraint on the metric."""


class ConvergenceError(QHMetricError, ArithmeticError):
    """The underlying eigensolver failed or returned an inaccurate result."""

    def __init__(self, message, residual=float("nan")):
        super().__init__(f"{message} (residual={residual:.3e})")
        self.residual = residual


class ExceptionalPointError(QHMetricError, ArithmeticError):
    """Left and right eigenvectors are (numerically) orthogonal."""

    def __init__(self, message, indices):
        super().__init__(f"{message} (indices={tuple(indices)})")
        self.indices = tuple(int(i) for i in indices)


class NoPositiveMetricError(QHMetricError, ArithmeticError):
    """No positive-definite metric exists for the given spectrum."""
