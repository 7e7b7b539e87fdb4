from .valuation import (absolute_value, divides, infty_valuation,
                        int_valuation, is_integral_at, residue_field_size,
                        uniformizer, valuation)
from .value_group import INFINITY, is_infinite, value_min, value_to_json

__all__ = [
    'absolute_value', 'divides', 'infty_valuation', 'int_valuation',
    'is_integral_at', 'residue_field_size', 'uniformizer', 'valuation',
    'INFINITY', 'is_infinite', 'value_min', 'value_to_json'
]
