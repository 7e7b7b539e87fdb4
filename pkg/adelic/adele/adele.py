import numpy as np

from ..local import LocalElement
from ..utils.errors import ShapeMismatch, SpecMismatch
from .finite_adele import FiniteAdele, inj_K

DEFAULT_TOLERANCE = 1e-9


def infinite_shape(field):
    """Number of archimedean (or infinite) coordinates of ``field``."""
    return len(field.infinite_places())


def _coordinates(field, infinite):
    infinite = tuple(infinite)
    places = field.infinite_places()
    if len(infinite) != len(places):
        raise ShapeMismatch(f'{field} needs {len(places)} infinite '
                            f'coordinates, got {len(infinite)}')
    coords = []
    for place, c in zip(places, infinite):
        if place.kind == 'infinity':
            if not isinstance(c, LocalElement):
                c = LocalElement(place, field.zero + c)
            elif c.place != place:
                raise ShapeMismatch(f'coordinate at {c.place} given for '
                                    f'{place}')
        elif place.kind == 'real':
            if isinstance(c, complex):
                raise ShapeMismatch(f'real coordinate expected, got {c}')
            c = float(c)
        else:
            c = complex(c)
        coords.append(c)
    return tuple(coords)


class Adele:
    """A full adele: a finite adele and the coordinates at the infinite
    places.

    Number fields carry one float per real embedding and one complex number
    per pair of complex embeddings; Fq(t) carries a :class:`LocalElement` at
    its place at infinity.
    """

    __slots__ = ('finite', 'infinite')

    def __init__(self, finite, infinite):
        self.finite = finite
        self.infinite = _coordinates(finite.field, infinite)

    @property
    def field(self):
        return self.finite.field

    def _check(self, other):
        if not isinstance(other, Adele):
            return inj_K_full(self.field.zero + other)
        if other.field != self.field:
            raise SpecMismatch(f'adeles of {self.field} and {other.field}')
        return other

    def __add__(self, other):
        other = self._check(other)
        return Adele(self.finite + other.finite,
                     [a + b for a, b in zip(self.infinite, other.infinite)])

    __radd__ = __add__

    def __neg__(self):
        return Adele(-self.finite, [-a for a in self.infinite])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        return Adele(self.finite * other.finite,
                     [a * b for a, b in zip(self.infinite, other.infinite)])

    __rmul__ = __mul__

    def equals(self, other, tol=DEFAULT_TOLERANCE):
        """Exact comparison of the finite parts, tolerance ``tol`` on the
        archimedean coordinates."""
        other = self._check(other)
        if self.finite != other.finite:
            return False
        return infinite_close(self.infinite, other.infinite, tol)

    def __eq__(self, other):
        if not isinstance(other, Adele):
            return NotImplemented
        return self.equals(other)

    def __hash__(self):
        return hash(self.finite)

    def __str__(self):
        text = str(self.finite)
        return f'{text[:-1]}; inf {format_infinite(self.infinite)}}}'

    def __repr__(self):
        return f'Adele({self.field.name}, {self})'


def infinite_close(a, b, tol=DEFAULT_TOLERANCE):
    if a and isinstance(a[0], LocalElement):
        return all(x == y for x, y in zip(a, b))
    return bool(
        np.allclose(np.asarray(a), np.asarray(b), rtol=0.0, atol=tol))


def format_infinite(coords):
    return ', '.join(str(c) if isinstance(c, LocalElement) else repr(c)
                     for c in coords)


def embed_infinite(k):
    """Images of a field element at the infinite places."""
    field = k.field
    if field.family == 'function_field':
        return (LocalElement(field.infinity, k), )
    return tuple(sigma(k) for sigma in field.embeddings())


def make_adele(finite, infinite):
    return Adele(finite, infinite)


def inj_K_full(k):
    """Diagonal embedding ``k -> (inj_K(k), sigma(k))`` into the adeles."""
    return Adele(inj_K(k), embed_infinite(k))


__all__ = [
    'Adele', 'DEFAULT_TOLERANCE', 'FiniteAdele', 'embed_infinite',
    'format_infinite', 'infinite_close', 'inj_K_full', 'make_adele'
]
