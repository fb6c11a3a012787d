"""Exception types shared across the package.

The CLI maps these onto exit codes: ValidationError subclasses exit 2,
CapExceededError subclasses exit 3, everything else exits 1.
"""


class PsingError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(PsingError):
    """Rejected user input."""


class NotPrimeError(ValidationError):
    pass


class PrimeRangeError(ValidationError):
    """p is beyond the range where the primality check is deterministic."""


class EmptyPartsError(ValidationError):
    pass


class PartNotPositiveError(ValidationError):
    pass


class PartExceedsPrimeError(ValidationError):
    pass


class RepSyntaxError(ValidationError):
    """Malformed representation string."""


class DivisibleJumpError(ValidationError):
    """Jump index divisible by p; shift numbers are undefined there."""


class CapExceededError(PsingError):
    """A resource guard tripped."""


class EnumerationCapError(CapExceededError):
    pass


class ProfileCapError(CapExceededError):
    pass


class InternalInconsistencyError(PsingError):
    """Two formulas that must agree did not; indicates an arithmetic bug."""
