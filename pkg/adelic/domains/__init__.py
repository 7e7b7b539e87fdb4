from .base_field import (Embedding, FieldElement, GlobalField, IntegralIdeal,
                         Place)
from .builder import FIELDS, build_field
from .exponents import ExponentVector
from .function_field import FunctionField
from .galois import GaloisField, galois_field
from .poly import FqPoly, poly_gcd
from .poly_factor import factor, irreducibles, is_irreducible
from .quadratic import QuadraticField
from .rationals import Rationals
from .spectrum import (embeddings, factor_ideal, ideal_mul, ideal_of,
                       multiply_out, places_up_to, primes_above)

__all__ = [
    'Embedding', 'FieldElement', 'GlobalField', 'IntegralIdeal', 'Place',
    'FIELDS', 'build_field', 'ExponentVector', 'FunctionField',
    'GaloisField', 'galois_field', 'FqPoly', 'poly_gcd', 'factor',
    'irreducibles', 'is_irreducible', 'QuadraticField', 'Rationals',
    'embeddings', 'factor_ideal', 'ideal_mul', 'ideal_of', 'multiply_out',
    'places_up_to', 'primes_above'
]
