from ..adele import (Adele, embed_infinite, format_infinite, infinite_close,
                     DEFAULT_TOLERANCE)
from ..local import LocalElement
from ..utils.errors import (InsufficientPrecision, NotAUnit, SpecMismatch)
from .finite_idele import FiniteIdele, inj_units_K


def _invert_coordinate(c):
    if isinstance(c, LocalElement):
        if c.approx.is_zero():
            if c.is_exact:
                raise NotAUnit(f'the component at {c.place} is zero')
            raise InsufficientPrecision(
                f'the component at {c.place} is zero to precision {c.prec}')
        return c.inverse()
    if c == 0:
        raise NotAUnit('an archimedean coordinate is zero')
    return 1 / c


class Idele:
    """A unit of the full adele ring: a finite idele and nonzero
    coordinates at the infinite places."""

    __slots__ = ('finite', 'infinite')

    def __init__(self, finite, infinite):
        # shape and type checks are shared with the full adeles
        coords = Adele(finite.value, infinite).infinite
        for c in coords:
            _invert_coordinate(c)
        self.finite = finite
        self.infinite = coords

    @property
    def field(self):
        return self.finite.field

    @classmethod
    def one(cls, field):
        return inj_units_K_full(field.one)

    def as_adele(self):
        return Adele(self.finite.value, self.infinite)

    def _check(self, other):
        if not isinstance(other, Idele):
            return inj_units_K_full(self.field.zero + other)
        if other.field != self.field:
            raise SpecMismatch(f'ideles of {self.field} and {other.field}')
        return other

    def __mul__(self, other):
        other = self._check(other)
        return Idele(self.finite * other.finite,
                     [a * b for a, b in zip(self.infinite, other.infinite)])

    __rmul__ = __mul__

    def invert(self):
        return Idele(self.finite.invert(),
                     [_invert_coordinate(c) for c in self.infinite])

    def __truediv__(self, other):
        return self * self._check(other).invert()

    def equals(self, other, tol=DEFAULT_TOLERANCE):
        other = self._check(other)
        return (self.finite == other.finite
                and infinite_close(self.infinite, other.infinite, tol))

    def __eq__(self, other):
        if not isinstance(other, Idele):
            return NotImplemented
        return self.equals(other)

    def __hash__(self):
        return hash(self.finite)

    def __str__(self):
        text = str(self.finite)
        return f'{text[:-1]}; inf {format_infinite(self.infinite)}}}'

    def __repr__(self):
        return f'Idele({self.field.name}, {self})'


def inj_units_K_full(k):
    """Diagonal embedding of ``K*`` into the full ideles."""
    return Idele(inj_units_K(k), embed_infinite(k))


def project_to_finite(x):
    """Drop the infinite coordinates of a full idele."""
    if isinstance(x, FiniteIdele):
        return x
    return x.finite
