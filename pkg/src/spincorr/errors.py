"""Exception types shared across the package."""


class SpinCorrError(Exception):
    """Base class for all errors raised by spincorr."""


class ShapeError(SpinCorrError, ValueError):
    """Array or file contents have the wrong shape."""


class CapacityError(SpinCorrError, ValueError):
    """Requested object exceeds the supported matrix size."""


class DomainError(SpinCorrError, ValueError):
    """Argument outside the domain of an operation."""


class ValidationError(SpinCorrError, ValueError):
    """A density-matrix or state invariant does not hold.

    ``invariant`` names the failed check (``"hermitian"``, ``"trace"``,
    ``"psd"`` or ``"norm"``) and ``magnitude`` is the size of the violation.
    """

    def __init__(self, invariant, magnitude, message=None):
        self.invariant = invariant
        self.magnitude = float(magnitude)
        if message is None:
            message = f"{invariant} check failed (violation {self.magnitude:.3g})"
        super().__init__(message)


class NumericalError(SpinCorrError, ArithmeticError):
    """An iterative or tolerance-checked computation failed.

    ``residual`` carries the offending magnitude when one is available.
    """

    def __init__(self, message, residual=None):
        self.residual = residual
        super().__init__(message)
