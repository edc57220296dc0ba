"""Exception types shared across the package."""


class NivenkitError(Exception):
    """Base class for every package-specific error."""


class InvalidInput(NivenkitError, ValueError):
    """An argument is outside the domain of the operation."""


class DigitOutOfRange(InvalidInput):
    """A digit does not satisfy 0 <= d < base."""


class ZeroInput(InvalidInput):
    """Zero was passed where a positive integer is required."""


class PreconditionViolated(NivenkitError):
    """A hypothesis the operation relies on does not hold."""


class CapExceeded(NivenkitError):
    """The configured digit budget would be exceeded."""
