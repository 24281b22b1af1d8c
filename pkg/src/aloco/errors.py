"""Exception types shared across the package."""


class AlocoError(Exception):
    """Base class for every error this package raises on purpose."""


class ParameterError(AlocoError, ValueError):
    """An argument is malformed, out of range, or inconsistent."""


class ConstraintViolation(AlocoError, ValueError):
    """A bit sequence contains a forbidden one-zeros-one pattern.

    `position` is the 0-based offset, counted from the left-most bit, of
    the 1 that opens the pattern.
    """

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class CorruptionError(AlocoError, ValueError):
    """Data is well-formed but cannot be an encoder output."""


class FramingError(AlocoError, ValueError):
    """A stream or packed frame does not have the required shape."""
