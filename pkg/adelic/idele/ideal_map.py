from ..adele import FiniteAdele
from ..valuation import uniformizer
from .finite_idele import FiniteIdele, to_add_valuations
from .idele import project_to_finite


def map_to_fractional_ideals(x):
    """The fractional ideal ``prod v**val_v(x_v)`` of a finite or full
    idele."""
    from ..classgroup import FractionalIdeal
    x = project_to_finite(x)
    return FractionalIdeal.from_exponents(x.field, to_add_valuations(x))


def preimage_idele(I):
    """An idele mapping onto the fractional ideal ``I``.

    The component at each place of the support is the exact uniformizer
    power ``pi_v**e_v``; the tail is 1.
    """
    exponents = I.exponents
    value = {v: uniformizer(v)**n for v, n in exponents.items()}
    inverse = {v: uniformizer(v)**(-n) for v, n in exponents.items()}
    return FiniteIdele(
        FiniteAdele(I.field, value, 1), FiniteAdele(I.field, inverse, 1))


def is_in_kernel(x):
    """Membership in ``I_{K,inf}``: every finite component is a local
    unit."""
    return not to_add_valuations(project_to_finite(x))
