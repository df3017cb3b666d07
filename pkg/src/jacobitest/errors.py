"""Exception types shared across the package."""


class SizeError(ValueError):
    """Matrix order or array length outside the supported range."""


class ParameterError(ValueError):
    """Invalid scalar parameter (gap, scale, tolerance, ...)."""


class NotJacobianError(ValueError):
    """A zero off-diagonal entry where a Jacobi matrix is required."""


class InterlacingError(ValueError):
    """Two spectra fail strict interlacing.

    ``index`` is the 0-based position ``k`` in the merged sequence
    ``(lam[0], mu[0], lam[1], ..., lam[n-1])`` with ``z[k] >= z[k+1]``.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class DegenerateDataError(ArithmeticError):
    """Reconstruction broke down; ``step`` is the recurrence step that failed."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class RangeError(OverflowError):
    """Result not representable in binary64; ``max_n`` is the largest supported order."""

    def __init__(self, message, max_n=None):
        super().__init__(message)
        self.max_n = max_n


class FormatError(ValueError):
    """Malformed matrix or spectra document."""
