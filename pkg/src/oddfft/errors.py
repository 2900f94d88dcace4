"""Exception types raised across the package."""


class OddFFTError(Exception):
    """Base class for all errors raised by oddfft."""


class InvalidModulusError(OddFFTError, ValueError):
    """A modulus or dimension is even, non-positive, or otherwise unusable."""


class NoInverseError(OddFFTError, ValueError):
    """A modular inverse was requested for a non-unit."""


class DimensionMismatchError(OddFFTError, ValueError):
    """Operands live in spaces of different dimension."""


class InvalidDigitError(OddFFTError, ValueError):
    """A radix digit lies outside its centered period."""


class CoprimalityError(OddFFTError, ValueError):
    """Two CRT factors share a common divisor."""

    def __init__(self, first, second, gcd):
        self.pair = (first, second)
        self.gcd = gcd
        super().__init__(
            f"factors {first} and {second} are not coprime (gcd = {gcd})")


class CapacityError(OddFFTError, ValueError):
    """Requested size exceeds a configured limit."""


class UnsupportedBackendError(OddFFTError, TypeError):
    """A transform backend was requested where it cannot be used."""


class FileFormatError(OddFFTError, ValueError):
    """A state or table file is malformed."""


class VerificationError(OddFFTError):
    """A computed result failed its correctness check."""
