"""Exception hierarchy shared by every module."""


class BoundsError(Exception):
    """Base class for all errors raised by this package."""


class InputError(BoundsError, ValueError):
    """Structurally invalid input (bad shapes, non-finite values, parse failures)."""


class EmptyInputError(InputError):
    pass


class NormalizationError(InputError):
    """Weights are negative or do not sum to one."""


class MissingMomentError(InputError):
    pass


class DegenerateSampleError(BoundsError, ValueError):
    """The sample has zero variance, so ratio statistics are undefined."""


class NotApplicableError(BoundsError):
    """An operation's hypotheses do not hold for this input."""


class PreconditionError(BoundsError, ValueError):
    pass


class DegreeError(InputError):
    pass


class NotDepressedError(InputError):
    pass


class RealRootednessViolation(BoundsError):
    """The polynomial provably has non-real roots."""


class ConvergenceError(BoundsError, RuntimeError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual
