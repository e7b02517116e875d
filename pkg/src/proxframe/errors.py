"""Exception hierarchy shared by all proxframe modules."""


class ProxFrameError(ValueError):
    """Base class for validation failures raised by proxframe."""


class ShapeError(ProxFrameError):
    pass


class RankError(ProxFrameError):
    pass


class NonFiniteError(ProxFrameError):
    pass


class LengthError(ProxFrameError):
    pass


class DomainError(ProxFrameError):
    pass


class RegionError(ProxFrameError):
    pass


class SizeError(ProxFrameError):
    pass


class StepSizeError(ProxFrameError):
    pass


class ConsistencyError(ProxFrameError):
    """Two independent evaluations of the same predicate disagree."""


class NoConvergenceError(RuntimeError):
    """An iterative solver hit its iteration cap.

    The best iterate found so far travels with the exception so callers can
    still inspect or use it.
    """

    def __init__(self, message, best=None, residual=None, trace=None):
        super().__init__(message)
        self.best = best
        self.residual = residual
        self.trace = trace


class FormatError(ProxFrameError):
    """A matrix, vector, image or config file is malformed."""
