"""Exception types shared across the package."""

__all__ = ["QEulerError", "PoleError", "NonConvergenceError", "CurveSampleError"]


class QEulerError(Exception):
    """Base class for library-specific failures."""


class PoleError(QEulerError, ArithmeticError):
    """Evaluation hit a pole: Gamma at a nonpositive integer, a vanishing
    rational-function denominator, or a zero base raised to a bad power."""


class NonConvergenceError(QEulerError, ArithmeticError):
    """A series failed its truncation contract within the configured budget.

    The partial result, when one is meaningful, rides along in ``partial``.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class CurveSampleError(QEulerError):
    """A grid sample failed; carries the offending (s, w) indices."""

    def __init__(self, message, s_index, w_index):
        super().__init__(message)
        self.s_index = s_index
        self.w_index = w_index
