"""Exception hierarchy shared by all modules."""


class EllipticDKPError(Exception):
    """Base class for every error raised by the package."""


class DomainError(EllipticDKPError, ValueError):
    """Invalid modular parameter or out-of-domain input."""


class TruncationExceeded(EllipticDKPError):
    """A series or product did not converge within ``max_terms``."""


class NearPole(EllipticDKPError):
    """Evaluation point within the guard radius of a zero/pole lattice.

    ``location`` is the offending argument; integrators also set ``s``,
    the path parameter at which the trajectory was aborted.
    """

    def __init__(self, message, location=None, s=None):
        super().__init__(message)
        self.location = location
        self.s = s


class BranchCrossing(EllipticDKPError):
    """A branch continuation path passes too close to a logarithmic singularity."""


class DegeneratePair(EllipticDKPError):
    pass


class NoConvergence(EllipticDKPError):
    pass


class OutOfRange(EllipticDKPError, ValueError):
    pass


class OrderMismatch(EllipticDKPError, ValueError):
    pass


class ZeroDenominator(EllipticDKPError, ZeroDivisionError):
    pass


class NoSignChange(EllipticDKPError):
    pass


class ConsistencyError(EllipticDKPError):
    """Two independent evaluation routes of the same quantity disagree."""


class StepTooLarge(EllipticDKPError):
    """An intermediate RK4 stage hit a pole guard although the accepted state did not."""

    def __init__(self, message, s=None):
        super().__init__(message)
        self.s = s
