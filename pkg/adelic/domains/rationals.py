from fractions import Fraction
from math import gcd

from sympy import factorint, isprime, multiplicity, primerange

from ..utils.errors import NotInvertible, NotPrime, ZeroIdeal
from .base_field import (Embedding, FieldElement, GlobalField, IntegralIdeal,
                         Place)
from .builder import FIELDS


@FIELDS.register_module()
class Rationals(GlobalField):
    """The rational numbers with ring of integers Z."""

    family = 'rationals'

    @property
    def key(self):
        return ('Q', )

    @property
    def name(self):
        return 'Q'

    def element(self, num, den=None):
        value = Fraction(num, 1 if den is None else den)
        return FieldElement(self, value.numerator, value.denominator)

    def from_int(self, n):
        return FieldElement(self, int(n), 1)

    def from_fraction(self, value):
        return self.element(value)

    @staticmethod
    def to_fraction(x):
        return Fraction(x.num, x.den)

    def add(self, x, y):
        return self.element(self.to_fraction(x) + self.to_fraction(y))

    def mul(self, x, y):
        return self.element(self.to_fraction(x) * self.to_fraction(y))

    def neg(self, x):
        return FieldElement(self, -x.num, x.den)

    def inv(self, x):
        if x.num == 0:
            raise NotInvertible('zero has no inverse in Q')
        return self.element(x.den, x.num)

    def ring_is_zero(self, r):
        return r == 0

    def is_one_denominator(self, den):
        return den == 1

    def ring_element(self, r):
        return FieldElement(self, r, 1)

    def format_element(self, x):
        return str(x.num) if x.den == 1 else f'{x.num}/{x.den}'

    def units(self):
        return [self.one, -self.one]

    # ideals of Z are stored by their positive generator

    def ideal_from_generators(self, gens):
        g = 0
        for r in gens:
            g = gcd(g, r)
        if g == 0:
            raise ZeroIdeal('the zero ideal has no positive generator')
        return IntegralIdeal(self, g)

    def principal_ideal(self, r):
        return IntegralIdeal(self, abs(r))

    def unit_ideal(self):
        return IntegralIdeal(self, 1)

    def ideal_mul(self, I, J):
        return IntegralIdeal(self, I.data * J.data)

    def ideal_norm(self, I):
        return I.data

    def ideal_contains(self, I, r):
        return r % I.data == 0

    def place_ideal(self, place):
        return IntegralIdeal(self, place.prime)

    def ideal_valuation(self, I, place):
        if I.data == 0:
            raise ZeroIdeal('valuation of the zero ideal')
        return int(multiplicity(place.prime, I.data))

    def ideal_primes(self, I):
        return sorted(map(int, factorint(I.data)))

    def format_ideal(self, I):
        return f'({I.data})'

    def primes_above(self, p):
        if not isinstance(p, int) or not isprime(p):
            raise NotPrime(f'{p} is not a prime')
        return [Place(self, 'finite', prime=p)]

    def places_up_to(self, bound):
        return [Place(self, 'finite', prime=p) for p in primerange(2, bound + 1)]

    def infinite_places(self):
        return [Place(self, 'real', index=0)]

    def residue_field_size(self, place):
        return place.prime

    def format_place(self, place):
        if place.kind == 'real':
            return 'real'
        return str(place.prime)

    def ring_valuation(self, place, r):
        return int(multiplicity(place.prime, abs(r)))

    def element_primes(self, x):
        primes = set(map(int, factorint(abs(x.num)))) | set(map(int, factorint(x.den)))
        return sorted(primes)

    def uniformizer(self, place):
        self.check_place(place)
        return self.from_int(place.prime)

    def residue(self, place, x):
        p = place.prime
        return self.from_int(x.num * pow(x.den, -1, p) % p)

    def residue_system(self, place):
        return [self.from_int(a) for a in range(place.prime)]

    def embeddings(self):
        return [Embedding(self, self.infinite_places()[0])]

    def evaluate(self, x, omega_value=None):
        return x.num / x.den

    def random_ring_element(self, rng, size=None, nonzero=False):
        size = size or self.sample_size
        while True:
            r = rng.randint(-size, size)
            if r or not nonzero:
                return r
