from .collect_env import collect_env
from .errors import (AdelicError, ArchimedeanPlace, InsufficientPrecision,
                     MathError, NotAUnit, NotInvertible, NotPrime, ParseError,
                     PlaceMismatch, ShapeMismatch, SpecMismatch,
                     UnsupportedField, WrongFamily, ZeroElement, ZeroIdeal)
from .logger import get_root_logger

__all__ = [
    'collect_env', 'get_root_logger', 'AdelicError', 'ArchimedeanPlace',
    'InsufficientPrecision', 'MathError', 'NotAUnit', 'NotInvertible',
    'NotPrime', 'ParseError', 'PlaceMismatch', 'ShapeMismatch', 'SpecMismatch',
    'UnsupportedField', 'WrongFamily', 'ZeroElement', 'ZeroIdeal'
]
