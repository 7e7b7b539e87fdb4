from typing import NamedTuple, Optional

from ..adele import DEFAULT_TOLERANCE, embed_infinite
from ..idele import (FiniteIdele, Idele, inj_units_K_full, is_in_kernel,
                     map_to_fractional_ideals, preimage_idele,
                     project_to_finite)
from ..utils.errors import SpecMismatch
from .class_group import ideal_class_of
from .fractional_ideal import is_principal


class IdeleClass:
    """A coset of ``I_K`` modulo the diagonal image of ``K*``.

    A finite idele is promoted to a full idele with unit infinite
    coordinates.
    """

    __slots__ = ('representative', )

    def __init__(self, representative):
        if isinstance(representative, FiniteIdele):
            representative = Idele(
                representative,
                embed_infinite(representative.field.one))
        self.representative = representative

    @property
    def field(self):
        return self.representative.field

    @classmethod
    def one(cls, field):
        return cls(Idele.one(field))

    def __mul__(self, other):
        return IdeleClass(self.representative * other.representative)

    def inverse(self):
        return IdeleClass(self.representative.invert())

    def __eq__(self, other):
        if not isinstance(other, IdeleClass):
            return NotImplemented
        return idele_class_eq(self, other)

    __hash__ = None

    def __str__(self):
        return f'[{self.representative}]'

    def __repr__(self):
        return f'IdeleClass({self.field.name}, {self.representative})'


class KernelWitness(NamedTuple):
    """Decomposition ``x = unit * inj_units_K(k)`` with ``unit`` in
    ``I_{K,inf}``."""

    unit: Idele
    k: object


def _decompose(z):
    generator = is_principal(map_to_fractional_ideals(z))
    if generator is None:
        return None
    unit = z / inj_units_K_full(generator)
    assert is_in_kernel(unit)
    return KernelWitness(unit, generator)


def idele_class_eq(x, y, tol=DEFAULT_TOLERANCE):
    """Whether two ideles represent the same idele class.

    ``x / y`` must be the diagonal image of some ``k`` in ``K*``. ``k`` is
    determined by the ideal of ``x / y`` up to a unit of the ring of
    integers, so the finite unit group is searched.
    """
    if x.field != y.field:
        raise SpecMismatch(f'idele classes of {x.field} and {y.field}')
    z = x.representative / y.representative
    witness = _decompose(z)
    if witness is None:
        return False
    one = Idele.one(z.field)
    for u in z.field.units():
        if (witness.unit / inj_units_K_full(u)).equals(one, tol=tol):
            return True
    return False


def idele_class_to_ideal_class(x):
    """Ideal class of the fractional ideal of a representative."""
    return ideal_class_of(
        map_to_fractional_ideals(project_to_finite(x.representative)))


def ideal_class_section(c):
    """An idele class mapping onto the ideal class ``c``."""
    return IdeleClass(preimage_idele(c.representative))


def is_in_kernel_subgroup(x, return_witness=False):
    """Membership in ``I_{K,inf} K* / K*``.

    Args:
        x (IdeleClass): The class.
        return_witness (bool): Also return the decomposition
            ``unit * inj_units_K(k)`` (``None`` when ``x`` is not a member).

    Returns:
        bool | tuple[bool, KernelWitness | None]
    """
    witness: Optional[KernelWitness] = _decompose(x.representative)
    member = witness is not None
    if return_witness:
        return member, witness
    return member
