"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class FourierMdsError(Exception):
    """Base class for all errors raised by fouriermds."""


class NotPrime(FourierMdsError, ValueError):
    pass


class NotPrimitive(FourierMdsError, ValueError):
    """The modulus does not make ``x`` a generator of the multiplicative group."""


class OrderTooLarge(FourierMdsError, ValueError):
    pass


class ContextMismatch(FourierMdsError, ValueError):
    """Operands live in different fields."""


class DivisionByZero(FourierMdsError, ZeroDivisionError):
    pass


class NotSquare(FourierMdsError, ValueError):
    pass


class IndexOutOfRange(FourierMdsError, IndexError):
    pass


class CombinationOverflow(FourierMdsError, RuntimeError):
    """An enumeration would exceed the configured minor budget."""


class Singular(FourierMdsError, ArithmeticError):
    pass


class NoRootOfUnity(FourierMdsError, ValueError):
    pass


class StepNotCoprime(FourierMdsError, ValueError):
    pass


class WrongProvenance(FourierMdsError, ValueError):
    """A construction was applied to a code it is not defined for."""


class FieldNotEven(FourierMdsError, ValueError):
    pass


class FieldTooSmall(FourierMdsError, ValueError):
    pass


class NotStandardForm(FourierMdsError, ValueError):
    pass


class LengthMismatch(FourierMdsError, ValueError):
    pass


class TooManyErasures(FourierMdsError, ValueError):
    pass


class DecodingFailure(FourierMdsError, ArithmeticError):
    pass


class SearchTooLarge(FourierMdsError, RuntimeError):
    pass


class MatrixFormatError(FourierMdsError, ValueError):
    """A matrix file could not be parsed."""
