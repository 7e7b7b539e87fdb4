from abc import ABCMeta, abstractmethod
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Any, Optional

from ..utils.errors import (ArchimedeanPlace, NotInvertible, NotPrime,
                            PlaceMismatch, SpecMismatch, UnsupportedField,
                            ZeroIdeal)
from .exponents import ExponentVector

_KIND_RANK = {'finite': 0, 'infinity': 1, 'real': 2, 'complex': 3}


@dataclass(frozen=True)
class Place:
    """A place of a global field.

    Finite places carry the prime they lie over (a rational prime or a monic
    irreducible polynomial), the root ``residue`` of the generator's minimal
    polynomial that distinguishes split conjugates (``None`` when there is
    only one place over the prime) and the ramification and residue degrees.
    Infinite places are the archimedean embeddings (``real``/``complex``,
    distinguished by ``index``) or the place at infinity of Fq(t).
    """

    field: Any = dc_field(repr=False)
    kind: str = 'finite'
    prime: Any = None
    residue: Optional[int] = None
    e: int = 1
    f: int = 1
    index: int = 0

    @property
    def is_finite(self):
        return self.kind == 'finite'

    @property
    def is_archimedean(self):
        return self.kind in ('real', 'complex')

    def sort_key(self):
        if isinstance(self.prime, int):
            prime_key = (self.prime, )
        elif self.prime is None:
            prime_key = ()
        else:
            prime_key = self.prime.sort_key()
        residue_key = -1 if self.residue is None else self.residue
        return (_KIND_RANK[self.kind], prime_key, residue_key, self.index)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    @property
    def residue_field_size(self):
        return self.field.residue_field_size(self)

    def __str__(self):
        return self.field.format_place(self)


class FieldElement:
    """An element of a global field as a canonical fraction.

    Instances are produced by :meth:`GlobalField.element` and are immutable.
    The numerator is a ring element of the field's ring of integers and the
    denominator is normalized per family (positive integer or monic
    polynomial), so equality of values is equality of representations.
    """

    __slots__ = ('field', 'num', 'den')

    def __init__(self, field, num, den):
        object.__setattr__(self, 'field', field)
        object.__setattr__(self, 'num', num)
        object.__setattr__(self, 'den', den)

    def __setattr__(self, name, value):
        raise AttributeError('FieldElement is immutable')

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise SpecMismatch(
                    f'elements of {self.field} and {other.field}')
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_fraction(Fraction(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return self.field.neg(self)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.add(self, self.field.neg(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.mul(self, other)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise NotInvertible(f'zero has no inverse in {self.field}')
        return self.field.inv(self)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse()**(-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self):
        return self.field.ring_is_zero(self.num)

    def __bool__(self):
        return not self.is_zero()

    def is_integral(self):
        """Whether the element lies in the ring of integers."""
        return self.field.is_one_denominator(self.den)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_fraction(Fraction(other))
        if not isinstance(other, FieldElement):
            return NotImplemented
        return (self.field == other.field and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((self.field.key, self.num, self.den))

    def __str__(self):
        return self.field.format_element(self)

    def __repr__(self):
        return f'{self.field.name}[{self}]'


class IntegralIdeal:
    """A nonzero ideal of the ring of integers in canonical form.

    ``data`` is the positive generator (Q), the monic generator (Fq(t)) or
    the Hermite normal form ``(a, b, c)`` of the module
    ``a*Z + (b + c*w)*Z`` (quadratic fields).
    """

    __slots__ = ('field', 'data')

    def __init__(self, field, data):
        self.field = field
        self.data = data

    def __mul__(self, other):
        if other.field != self.field:
            raise SpecMismatch(f'ideals of {self.field} and {other.field}')
        return self.field.ideal_mul(self, other)

    def __pow__(self, n):
        result = self.field.unit_ideal()
        for _ in range(n):
            result = result * self
        return result

    @property
    def norm(self):
        return self.field.ideal_norm(self)

    def __contains__(self, r):
        return self.field.ideal_contains(self, r)

    def is_unit(self):
        return self == self.field.unit_ideal()

    def __eq__(self, other):
        if not isinstance(other, IntegralIdeal):
            return NotImplemented
        return self.field == other.field and self.data == other.data

    def __hash__(self):
        return hash((self.field.key, self.data))

    def __str__(self):
        return self.field.format_ideal(self)

    def __repr__(self):
        return f'IntegralIdeal({self.field.name}, {self})'


class Embedding:
    """An archimedean embedding, evaluated with double precision."""

    def __init__(self, field, place, omega_value=None):
        self.field = field
        self.place = place
        self.omega_value = omega_value

    @property
    def is_real(self):
        return self.place.kind == 'real'

    def __call__(self, x):
        return self.field.evaluate(x, self.omega_value)

    def __repr__(self):
        return f'Embedding({self.field.name}, {self.place})'


class GlobalField(metaclass=ABCMeta):
    """Base class of the supported global fields.

    A subclass fixes the ring of integers ``R`` and implements exact field
    arithmetic on canonical fractions, the ideal arithmetic of ``R``, its
    places and the ring-level valuation ``val_v(r)`` of nonzero ``r``.
    Everything else (valuations on the field, supports, factorizations) is
    derived here.
    """

    family = None
    degree = 1

    @property
    @abstractmethod
    def key(self):
        pass

    @property
    @abstractmethod
    def name(self):
        pass

    def __eq__(self, other):
        return isinstance(other, GlobalField) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return self.name

    def __str__(self):
        return self.name

    # element construction and arithmetic

    @abstractmethod
    def element(self, num, den=None):
        """Build the canonical element ``num / den``."""

    @abstractmethod
    def from_int(self, n):
        pass

    def from_fraction(self, value):
        return self.from_int(value.numerator) / self.from_int(
            value.denominator)

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    @abstractmethod
    def add(self, x, y):
        pass

    @abstractmethod
    def mul(self, x, y):
        pass

    @abstractmethod
    def neg(self, x):
        pass

    @abstractmethod
    def inv(self, x):
        pass

    @abstractmethod
    def ring_is_zero(self, r):
        pass

    @abstractmethod
    def is_one_denominator(self, den):
        pass

    @abstractmethod
    def ring_element(self, r):
        """Embed a ring element as a field element."""

    @abstractmethod
    def format_element(self, x):
        pass

    def denominator_element(self, x):
        return self.ring_element(x.den)

    def numerator_element(self, x):
        return self.ring_element(x.num)

    def prime_element(self, p):
        """A base prime (rational prime or monic irreducible) as a field
        element."""
        return self.from_int(p)

    def units(self):
        """The unit group of the ring of integers, when it is finite."""
        raise UnsupportedField(f'the unit group of {self.name} is infinite')

    # ideals

    @abstractmethod
    def ideal_from_generators(self, gens):
        """Ideal generated by the given ring elements."""

    @abstractmethod
    def principal_ideal(self, r):
        pass

    @abstractmethod
    def unit_ideal(self):
        pass

    @abstractmethod
    def ideal_mul(self, I, J):
        pass

    @abstractmethod
    def ideal_norm(self, I):
        pass

    @abstractmethod
    def ideal_contains(self, I, r):
        pass

    @abstractmethod
    def place_ideal(self, place):
        pass

    @abstractmethod
    def ideal_valuation(self, I, place):
        pass

    @abstractmethod
    def ideal_primes(self, I):
        """Primes of the base ring below the places dividing ``I``."""

    @abstractmethod
    def format_ideal(self, I):
        pass

    def ideal_from_exponents(self, exponents):
        """Multiply out ``prod v**n_v`` for nonnegative exponents."""
        result = self.unit_ideal()
        for place, n in exponents.items():
            assert n >= 0, 'integral ideals have nonnegative exponents'
            result = result * self.place_ideal(place)**n
        return result

    def factor_ideal(self, I):
        """Factor a nonzero integral ideal into places.

        Returns:
            ExponentVector: Positive exponents, empty for the unit ideal.
        """
        if I.field != self:
            raise SpecMismatch(f'ideal of {I.field} used in {self}')
        if self.ideal_norm(I) == 0:
            raise ZeroIdeal('the zero ideal has no factorization')
        exponents = {}
        for p in self.ideal_primes(I):
            for place in self.primes_above(p):
                n = self.ideal_valuation(I, place)
                if n:
                    exponents[place] = n
        return ExponentVector(exponents)

    # places

    @abstractmethod
    def primes_above(self, p):
        """Finite places over a prime of the base ring."""

    @abstractmethod
    def places_up_to(self, bound):
        """Finite places over the base primes up to ``bound``."""

    @abstractmethod
    def infinite_places(self):
        pass

    @abstractmethod
    def residue_field_size(self, place):
        pass

    @abstractmethod
    def format_place(self, place):
        pass

    def check_place(self, place, finite=True):
        if place.field != self:
            raise PlaceMismatch(f'place {place} belongs to {place.field}, '
                                f'not {self}')
        if place.is_archimedean:
            raise ArchimedeanPlace(f'{place} is archimedean')
        if finite and not place.is_finite:
            raise PlaceMismatch(f'{place} is not a finite place')

    def place_above(self, p):
        """The unique place over ``p``; ambiguity is a usage error."""
        places = self.primes_above(p)
        if len(places) != 1:
            raise NotPrime(f'{p} does not determine a single place of '
                           f'{self}; name one of the places above it')
        return places[0]

    # valuations

    @abstractmethod
    def ring_valuation(self, place, r):
        """Exponent of ``place`` in the principal ideal of nonzero ``r``."""

    @abstractmethod
    def element_primes(self, x):
        """Base primes below every place where ``x`` has nonzero
        valuation."""

    def element_valuation(self, place, x):
        return self.ring_valuation(place, x.num) - self.ring_valuation(
            place, x.den)

    def support(self, x):
        """Valuations of a nonzero element at the places where they are
        nonzero."""
        exponents = {}
        for p in self.element_primes(x):
            for place in self.primes_above(p):
                n = self.element_valuation(place, x)
                if n:
                    exponents[place] = n
        return ExponentVector(exponents)

    @abstractmethod
    def uniformizer(self, place):
        pass

    @abstractmethod
    def residue(self, place, x):
        """Canonical residue representative of an element integral at
        ``place``."""

    # archimedean data

    def embeddings(self):
        raise UnsupportedField(
            f'{self.name} has no archimedean embeddings')

    def evaluate(self, x, omega_value):
        raise UnsupportedField(
            f'{self.name} has no archimedean embeddings')

    # sampling

    sample_size = 20

    @abstractmethod
    def random_ring_element(self, rng, size=None, nonzero=False):
        pass

    def random_element(self, rng, size=None, nonzero=False):
        num = self.random_ring_element(rng, size, nonzero=nonzero)
        den = self.random_ring_element(rng, size, nonzero=True)
        return self.ring_element(num) / self.ring_element(den)
