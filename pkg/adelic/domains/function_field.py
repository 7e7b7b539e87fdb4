from ..utils.errors import (NotInvertible, NotPrime, UnsupportedField,
                            WrongFamily, ZeroIdeal)
from .base_field import FieldElement, GlobalField, IntegralIdeal, Place
from .builder import FIELDS
from .galois import galois_field
from .poly import FqPoly, poly_gcd, poly_gcdex
from .poly_factor import DEFAULT_FACTOR_SEED, factor, irreducibles, \
    is_irreducible


@FIELDS.register_module()
class FunctionField(GlobalField):
    """The rational function field Fq(t) with ring of integers Fq[t].

    Field elements are ``num / den`` with ``den`` monic and coprime to
    ``num``. Besides the finite places (monic irreducibles) there is the
    place at infinity with valuation ``deg(den) - deg(num)``.

    Args:
        p (int): Characteristic.
        e (int): ``q = p**e``. Defaults to 1.
        factor_seed (int): Seed of the equal-degree splitting used when
            factoring polynomials. Defaults to 0.
    """

    family = 'function_field'

    def __init__(self, p, e=1, factor_seed=DEFAULT_FACTOR_SEED):
        self.Fq = galois_field(int(p), int(e))
        self.factor_seed = factor_seed

    @property
    def q(self):
        return self.Fq.q

    @property
    def key(self):
        return ('Fq(t)', self.Fq.p, self.Fq.e)

    @property
    def name(self):
        return f'Fq(t;q={self.q})'

    def poly(self, coeffs):
        return FqPoly(self.Fq, coeffs)

    @property
    def t(self):
        return FieldElement(self, FqPoly.x(self.Fq), self.poly((1, )))

    @property
    def g(self):
        """The generator of Fq over its prime field as a constant."""
        if self.Fq.e == 1:
            raise WrongFamily(f'{self.name} has no constant generator g')
        return self.ring_element(self.poly((self.Fq.gen, )))

    # elements

    def element(self, num, den=None):
        if isinstance(num, int):
            num = self.poly((self.Fq.from_int(num), ))
        if den is None:
            den = self.poly((1, ))
        elif isinstance(den, int):
            den = self.poly((self.Fq.from_int(den), ))
        if not den:
            raise NotInvertible('zero denominator')
        if not num:
            return FieldElement(self, num, self.poly((1, )))
        g = poly_gcd(num, den)
        num, den = num // g, den // g
        inv = self.Fq.inv(den.lc)
        return FieldElement(self, num.scale(inv), den.scale(inv))

    def from_int(self, n):
        return FieldElement(self, self.poly((self.Fq.from_int(n), )),
                            self.poly((1, )))

    def constant(self, c):
        return FieldElement(self, self.poly((c, )), self.poly((1, )))

    def add(self, x, y):
        return self.element(x.num * y.den + y.num * x.den, x.den * y.den)

    def mul(self, x, y):
        return self.element(x.num * y.num, x.den * y.den)

    def neg(self, x):
        return FieldElement(self, -x.num, x.den)

    def inv(self, x):
        if not x.num:
            raise NotInvertible(f'zero has no inverse in {self.name}')
        return self.element(x.den, x.num)

    def ring_is_zero(self, r):
        return not r

    def is_one_denominator(self, den):
        return den.is_one()

    def ring_element(self, r):
        return FieldElement(self, r, self.poly((1, )))

    def format_element(self, x):
        num = x.num.format()
        if x.den.is_one():
            return num
        den = x.den.format()
        if sum(1 for c in x.num.coeffs if c) > 1 or '+' in num:
            num = f'({num})'
        if sum(1 for c in x.den.coeffs if c) > 1:
            den = f'({den})'
        return f'{num}/{den}'

    def prime_element(self, p):
        return self.ring_element(p)

    def units(self):
        return [self.constant(c) for c in self.Fq.units()]

    # ideals of Fq[t] are stored by their monic generator

    def ideal_from_generators(self, gens):
        g = self.poly(())
        for r in gens:
            g = poly_gcd(g, r)
        return self.principal_ideal(g)

    def principal_ideal(self, r):
        if not r:
            raise ZeroIdeal('the zero ideal has no monic generator')
        return IntegralIdeal(self, r.monic())

    def unit_ideal(self):
        return IntegralIdeal(self, self.poly((1, )))

    def ideal_mul(self, I, J):
        return IntegralIdeal(self, I.data * J.data)

    def ideal_norm(self, I):
        return self.q**I.data.degree

    def ideal_contains(self, I, r):
        return not r % I.data

    def place_ideal(self, place):
        return IntegralIdeal(self, place.prime)

    def ideal_valuation(self, I, place):
        return self.ring_valuation(place, I.data)

    def ideal_primes(self, I):
        return [g for g, _ in factor(I.data, self.factor_seed)[1]]

    def format_ideal(self, I):
        return f'({I.data})'

    # places

    def primes_above(self, p):
        if not isinstance(p, FqPoly) or p.field != self.Fq:
            raise NotPrime(f'{p} is not a polynomial over {self.Fq!r}')
        if not is_irreducible(p):
            raise NotPrime(f'{p} is not irreducible')
        return [Place(self, 'finite', prime=p.monic(), f=p.degree)]

    def places_up_to(self, bound):
        return [
            Place(self, 'finite', prime=g, f=g.degree)
            for degree in range(1, bound + 1)
            for g in irreducibles(self.Fq, degree)
        ]

    @property
    def infinity(self):
        return Place(self, 'infinity')

    def infinite_places(self):
        return [self.infinity]

    def residue_field_size(self, place):
        if place.kind == 'infinity':
            return self.q
        return self.q**place.prime.degree

    def format_place(self, place):
        if place.kind == 'infinity':
            return 'inf'
        return place.prime.format()

    # valuations

    def ring_valuation(self, place, r):
        if place.kind == 'infinity':
            return -r.degree
        n = 0
        while True:
            quo, rem = divmod(r, place.prime)
            if rem:
                return n
            r, n = quo, n + 1

    def element_valuation(self, place, x):
        if place.kind == 'infinity':
            return x.den.degree - x.num.degree
        return super().element_valuation(place, x)

    def infty_valuation(self, x):
        return self.element_valuation(self.infinity, x)

    def element_primes(self, x):
        primes = [g for g, _ in factor(x.num, self.factor_seed)[1]]
        primes += [g for g, _ in factor(x.den, self.factor_seed)[1]]
        return sorted(set(primes), key=lambda g: g.sort_key())

    def uniformizer(self, place):
        self.check_place(place, finite=False)
        if place.kind == 'infinity':
            return self.t.inverse()
        return self.ring_element(place.prime)

    def residue(self, place, x):
        if place.kind == 'infinity':
            if x.num.degree < x.den.degree:
                return self.zero
            assert x.num.degree == x.den.degree, \
                f'{x} is not integral at infinity'
            return self.constant(self.Fq.mul(x.num.lc, self.Fq.inv(x.den.lc)))
        s, _, h = poly_gcdex(x.den, place.prime)
        assert h.is_one(), f'{x} is not integral at {place}'
        return self.ring_element(x.num * s % place.prime)

    def residue_system(self, place):
        if place.kind == 'infinity':
            return [self.constant(c) for c in self.Fq.elements()]
        degree = place.prime.degree
        reps = []
        for index in range(self.q**degree):
            coeffs = []
            for _ in range(degree):
                index, c = divmod(index, self.q)
                coeffs.append(c)
            reps.append(self.ring_element(self.poly(coeffs)))
        return reps

    def embeddings(self):
        raise UnsupportedField(
            f'the infinite place of {self.name} is nonarchimedean')

    sample_size = 3

    def random_ring_element(self, rng, size=None, nonzero=False):
        size = size or self.sample_size
        while True:
            degree = rng.randint(0, size)
            r = self.poly([rng.randrange(self.q) for _ in range(degree + 1)])
            if r or not nonzero:
                return r
