from .local_element import (LocalElement, LocalIntegerWitness, from_global,
                            integer_witness, is_integer, local_add,
                            local_inv, local_mul, local_neg, local_valuation)
from .render import digits, format_expansion

__all__ = [
    'LocalElement', 'LocalIntegerWitness', 'from_global', 'integer_witness',
    'is_integer', 'local_add', 'local_inv', 'local_mul', 'local_neg',
    'local_valuation', 'digits', 'format_expansion'
]
