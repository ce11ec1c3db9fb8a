"""Exception types raised across the package."""


class HadamardCauchyError(Exception):
    """Base class for package errors."""


class UnsupportedDomainError(HadamardCauchyError, ValueError):
    """An argument lies outside the domain an operation supports."""


class FieldMismatchError(HadamardCauchyError, ValueError):
    """Operands belong to different cyclotomic fields."""


class OrderMismatchError(HadamardCauchyError, ValueError):
    """Truncated objects (series, jets) with incompatible truncation."""


class ShapeError(HadamardCauchyError, ValueError):
    """Matrix shape does not fit the operation."""


class SizeLimitError(HadamardCauchyError, ValueError):
    """A brute-force routine was asked for a size beyond its cap."""


class InvalidInstanceError(HadamardCauchyError, ValueError):
    """Parameters violate a precondition of a closed form (a = b, c in {0, 1}, ...)."""


class NonIntegralError(HadamardCauchyError, ArithmeticError):
    """A quantity that must be an integer came out fractional."""
