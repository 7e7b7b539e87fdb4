from ..adele import FiniteAdele, adele_eq, inj_K
from ..domains import ExponentVector
from ..utils.errors import (InsufficientPrecision, NotAUnit, SpecMismatch,
                            ZeroElement)


def _inverse_component(c):
    if c.approx.is_zero():
        if c.is_exact:
            raise NotAUnit(f'the component at {c.place} is zero')
        raise InsufficientPrecision(
            f'the component at {c.place} is zero to precision {c.prec}')
    return c.inverse()


class FiniteIdele:
    """A unit of the finite adele ring stored with its inverse.

    Args:
        value (FiniteAdele): The unit.
        inverse (FiniteAdele): Its inverse; ``value * inverse`` must equal
            the identity adele.
    """

    __slots__ = ('value', 'inverse')

    def __init__(self, value, inverse):
        if value.field != inverse.field:
            raise SpecMismatch(f'idele of {value.field} paired with an '
                               f'inverse over {inverse.field}')
        if value.tail.is_zero():
            raise NotAUnit('an adele with zero tail is not a unit')
        if not adele_eq(value * inverse, FiniteAdele.one(value.field)):
            raise NotAUnit(f'{inverse} is not the inverse of {value}')
        self.value = value
        self.inverse = inverse

    @property
    def field(self):
        return self.value.field

    @classmethod
    def one(cls, field):
        return cls(FiniteAdele.one(field), FiniteAdele.one(field))

    def _check(self, other):
        if not isinstance(other, FiniteIdele):
            return inj_units_K(self.field.zero + other)
        if other.field != self.field:
            raise SpecMismatch(f'ideles of {self.field} and {other.field}')
        return other

    def __mul__(self, other):
        other = self._check(other)
        return FiniteIdele(self.value * other.value,
                           self.inverse * other.inverse)

    __rmul__ = __mul__

    def invert(self):
        return FiniteIdele(self.inverse, self.value)

    def __truediv__(self, other):
        return self * self._check(other).invert()

    def __pow__(self, n):
        base = self if n >= 0 else self.invert()
        result = FiniteIdele.one(self.field)
        for _ in range(abs(n)):
            result = result * base
        return result

    def __eq__(self, other):
        if not isinstance(other, FiniteIdele):
            return NotImplemented
        return adele_eq(self.value, other.value)

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f'FiniteIdele({self.field.name}, {self.value})'


def try_invert(x):
    """Return ``x`` as a :class:`FiniteIdele` if it is a unit.

    Raises:
        NotAUnit: The tail or an exceptional component is zero.
        InsufficientPrecision: A component is zero to its known precision.
    """
    if x.tail.is_zero():
        raise NotAUnit('an adele with zero tail is not a unit')
    inverse = FiniteAdele(
        x.field,
        {v: _inverse_component(c) for v, c in x.exceptional.items()},
        x.tail.inverse())
    return FiniteIdele(x, inverse)


def inj_units_K(k):
    """Diagonal embedding of ``K*`` into the finite ideles."""
    if k.is_zero():
        raise ZeroElement('0 is not a unit of the field')
    return FiniteIdele(inj_K(k), inj_K(k.inverse()))


def to_add_valuations(x):
    """Additive valuations of the components of a finite idele.

    Returns:
        ExponentVector: The nonzero valuations, finitely many.
    """
    if not isinstance(x, FiniteIdele):
        x = x.finite
    value = x.value
    entries = {v: c.valuation() for v, c in value.exceptional.items()}
    for place, n in value.field.support(value.tail).items():
        entries.setdefault(place, n)
    return ExponentVector(entries)
