"""Exception hierarchy shared by every module of the package."""


class HurwitzError(Exception):
    """Base class for all errors raised by :mod:`hurwitz_tn`."""


class PreconditionFailed(HurwitzError, ValueError):
    pass


class DegreeTooSmall(PreconditionFailed):
    pass


class GcdUnreliable(HurwitzError):
    """Floating-point gcd recovery left a division residual above tolerance."""


class RootFindingFailed(HurwitzError):
    """The simultaneous iteration did not converge.

    The best iterate is kept on ``best`` so callers can still inspect it.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class CapExceeded(HurwitzError):
    """Exhaustive minor enumeration was requested on a matrix above the size cap."""


class FactorizationFailed(HurwitzError):
    pass


class UseQuasiStabilityRule(PreconditionFailed):
    """Degrees 1..3: finite TN is equivalent to quasi-stability, no sector applies."""


class SpectralFailed(HurwitzError):
    pass
