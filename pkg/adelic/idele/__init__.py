from .finite_idele import (FiniteIdele, inj_units_K, to_add_valuations,
                           try_invert)
from .ideal_map import is_in_kernel, map_to_fractional_ideals, preimage_idele
from .idele import Idele, inj_units_K_full, project_to_finite

__all__ = [
    'FiniteIdele', 'inj_units_K', 'to_add_valuations', 'try_invert',
    'is_in_kernel', 'map_to_fractional_ideals', 'preimage_idele', 'Idele',
    'inj_units_K_full', 'project_to_finite'
]
