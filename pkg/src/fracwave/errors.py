"""Exception types shared across the package."""


class FracwaveError(Exception):
    """Base class for all library-specific errors."""


class DomainError(FracwaveError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class UnsupportedRegionError(FracwaveError, ValueError):
    """Parameters fall outside the validated accuracy region.

    Raised instead of returning a silently wrong value.
    """


class InversionError(FracwaveError, RuntimeError):
    """Numerical Laplace inversion failed; the message carries node diagnostics."""


class DegenerateModelError(FracwaveError, ValueError):
    """The requested quantity does not exist for a degenerate model.

    For instance the order-1 subordinator has no density; callers must use
    the exact shift instead.
    """


class MassDeficitError(FracwaveError, RuntimeError):
    """A truncation window captured too little probability mass."""


class SingularFrequencyError(FracwaveError, ValueError):
    """A Fourier multiplier was requested at a singular frequency."""


class RangeConditionError(FracwaveError, ValueError):
    """Initial data violates the range condition required by a solution formula."""
