from .adele import (DEFAULT_TOLERANCE, Adele, embed_infinite, format_infinite,
                    infinite_close, infinite_shape, inj_K_full, make_adele)
from .basic_open import BasicOpenSpec, is_in_basic_open
from .finite_adele import (FiniteAdele, adele_add, adele_eq, adele_mul,
                           adele_neg, inj_K)
from .localization import (LocalizationForm, from_localization_form,
                           to_localization_form)

__all__ = [
    'DEFAULT_TOLERANCE', 'Adele', 'embed_infinite', 'format_infinite',
    'infinite_close', 'infinite_shape', 'inj_K_full', 'make_adele',
    'BasicOpenSpec', 'is_in_basic_open', 'FiniteAdele', 'adele_add',
    'adele_eq', 'adele_mul', 'adele_neg', 'inj_K', 'LocalizationForm',
    'from_localization_form', 'to_localization_form'
]
