"""Exception types raised by dvdbinom."""


class DvdError(Exception):
    """Base class for all library errors."""


class NonPrimeError(DvdError, ValueError):
    pass


class ReducibleModulusError(DvdError, ValueError):
    pass


class DegreeMismatchError(DvdError, ValueError):
    pass


class LogOfZeroError(DvdError, ValueError):
    pass


class NotIntegralError(DvdError, ValueError):
    """Raised when an element of negative valuation is used where V is required."""


class LengthMismatchError(DvdError, ValueError):
    pass


class OutOfRangeError(DvdError, ValueError):
    pass


class ConfigError(DvdError, ValueError):
    """Invalid model configuration (representatives, primitive root, ...)."""
