"""Exception hierarchy shared by all ghwlab modules."""


class GhwLabError(Exception):
    """Base class for every error raised by ghwlab."""


# finite fields
class NotPrime(GhwLabError, ValueError):
    pass


class FieldTooLarge(GhwLabError, ValueError):
    pass


class DivisionByZero(GhwLabError, ZeroDivisionError):
    pass


class NotADivisor(GhwLabError, ValueError):
    pass


class LogOfZero(GhwLabError, ValueError):
    pass


# cyclotomic / quadratic integers
class LengthMismatch(GhwLabError, ValueError):
    pass


class FieldMismatch(GhwLabError, ValueError):
    pass


class NotDivisibleByTwo(GhwLabError, ArithmeticError):
    pass


# character sums
class InconsistentParams(GhwLabError, ValueError):
    pass


class ZeroA(GhwLabError, ValueError):
    pass


# codes and weight hierarchies
class InvalidDMode(GhwLabError, ValueError):
    pass


class RankOutOfRange(GhwLabError, ValueError):
    pass


class TooLarge(GhwLabError, RuntimeError):
    """A brute-force request exceeds the configured feasibility ceiling."""


class NonIntegerN(GhwLabError, ArithmeticError):
    """A subspace count from character sums came out non-integral (arithmetic bug)."""


class BoundViolation(GhwLabError, AssertionError):
    """A computed hierarchy violates the Singleton-type sandwich."""
