"""Exception types shared across the package."""


class CapExceededError(RuntimeError):
    """A brute-force computation was refused because q exceeds the configured cap."""


class ExactnessError(ArithmeticError):
    """An integer division that must be exact was not.

    Raised when a closed formula with a rational prefactor fails its
    divisibility assertion; this indicates an internal inconsistency,
    never a rounding issue.
    """


class VerificationError(RuntimeError):
    """Two computation routes that must agree produced different results."""
