"""Exception types shared across the package."""


class GraphFracError(Exception):
    """Base class for all errors raised by graphfrac."""


class GammaPoleError(GraphFracError, ValueError):
    """Gamma evaluated at a non-positive integer."""


class GammaOverflowError(GraphFracError, OverflowError):
    """Result exceeds the double-precision range."""


class ConvergenceError(GraphFracError, ArithmeticError):
    """An iterative evaluation failed to reach its tolerance in budget."""


class GraphMismatchError(GraphFracError, ValueError):
    """Two graph functions live on incompatible star graphs."""


class PoleError(GraphFracError, ValueError):
    """Secular function evaluated too close to a cotangent pole."""


class EnumerationError(GraphFracError, RuntimeError):
    """Eigenvalue bracketing failed; carries the offending interval."""

    def __init__(self, message, interval=None):
        super().__init__(message)
        self.interval = interval


class GridCompatibilityError(GraphFracError, ValueError):
    """Sampled data does not match the requested grid layout."""


class ProblemSpecError(GraphFracError, ValueError):
    """A problem description file failed validation."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class NumericalFailureError(GraphFracError, RuntimeError):
    """A linear solve or similar numerical kernel failed."""
