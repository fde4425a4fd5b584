"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the domain of an operation (z = 0, negative real axis, ...)."""


class EvaluationOverflowError(OverflowError):
    """Bessel evaluation left the double-precision floating range."""


class ConvergenceError(RuntimeError):
    """Newton iteration failed to converge; carries the last iterate."""

    def __init__(self, message, last_z=None, residual=None):
        super().__init__(message)
        self.last_z = last_z
        self.residual = residual


class BracketError(RuntimeError):
    """Sign-change bracketing failed for a real zero; carries the branch index."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class ExtremumNotFoundError(RuntimeError):
    """A branch path contains no extremum of the requested kind."""


class PathError(ValueError):
    """A branch path is too short or malformed for the requested operation."""
