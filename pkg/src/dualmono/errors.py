"""Exception types raised across the package."""


class DualMonoError(ValueError):
    """Base class for validation failures (CLI exit status 2)."""


class DimensionError(DualMonoError):
    """Shape mismatch or a matrix larger than the configured cap."""


class InvalidStateError(DualMonoError):
    """Input is not a valid normalized state or density operator."""


class DomainError(DualMonoError):
    """Argument outside the domain of a function (x range, q window, exponent)."""


class ConditionError(DualMonoError):
    """Ordering conditions required by a bound do not hold."""
