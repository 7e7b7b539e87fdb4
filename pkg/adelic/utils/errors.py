class AdelicError(Exception):
    """Base class of every error raised by the package."""


class ParseError(AdelicError, ValueError):
    """A field, element, place or adele literal does not parse."""


class MathError(AdelicError, ValueError):
    """Base class of mathematical errors (bad input for the operation)."""


class NotPrime(MathError):
    pass


class ZeroIdeal(MathError):
    pass


class ZeroElement(MathError):
    pass


class NotAUnit(MathError):
    pass


class NotInvertible(MathError, ZeroDivisionError):
    pass


class UnsupportedField(MathError):
    pass


class WrongFamily(MathError):
    pass


class ArchimedeanPlace(MathError):
    pass


class PlaceMismatch(MathError):
    pass


class SpecMismatch(MathError):
    pass


class ShapeMismatch(MathError):
    pass


class InsufficientPrecision(AdelicError, ArithmeticError):
    """The tracked precision is too low to decide the requested answer."""
