from fractions import Fraction
from math import gcd

import numpy as np
from sympy import factorint, isprime, multiplicity, primerange, sqrt_mod

from ..utils.errors import (NotInvertible, NotPrime, UnsupportedField,
                            ZeroIdeal)
from .base_field import (Embedding, FieldElement, GlobalField, IntegralIdeal,
                         Place)
from .builder import FIELDS
from .hnf import hnf, hnf_basis, hnf_contains, hnf_divide, hnf_index


def _is_squarefree(n):
    return all(k == 1 for p, k in factorint(abs(n)).items() if p != -1)


def _v(p, n):
    return int(multiplicity(p, abs(n))) if n else None


@FIELDS.register_module()
class QuadraticField(GlobalField):
    """The quadratic field Q(sqrt d) with its maximal order Z[w].

    ``w = (1 + sqrt d) / 2`` when ``d = 1 mod 4`` and ``w = sqrt d``
    otherwise; so ``w**2 = t*w + n`` with ``(t, n) = (1, (d - 1) / 4)`` or
    ``(0, d)``. Ring elements are pairs ``(x, y)`` meaning ``x + y*w``;
    field elements keep a positive integer denominator coprime to the
    content of the numerator.

    Args:
        d (int): Squarefree integer different from 0 and 1.
    """

    family = 'quadratic'
    degree = 2

    def __init__(self, d):
        d = int(d)
        if d in (0, 1) or not _is_squarefree(d):
            raise UnsupportedField(
                f'd = {d} must be a squarefree integer other than 0 and 1')
        self.d = d
        if d % 4 == 1:
            self.trace_w, self.norm_w = 1, (d - 1) // 4
            self.disc = d
        else:
            self.trace_w, self.norm_w = 0, d
            self.disc = 4 * d

    @property
    def key(self):
        return ('Q(sqrt)', self.d)

    @property
    def name(self):
        return f'Q(sqrt {self.d})'

    @property
    def is_imaginary(self):
        return self.d < 0

    # ring arithmetic on pairs

    def ring_mul(self, u, v):
        x1, y1 = u
        x2, y2 = v
        yy = y1 * y2
        return (x1 * x2 + yy * self.norm_w,
                x1 * y2 + x2 * y1 + yy * self.trace_w)

    def conj(self, u):
        x, y = u
        return (x + y * self.trace_w, -y)

    def ring_norm(self, u):
        x, y = u
        return x * x + self.trace_w * x * y - self.norm_w * y * y

    # elements

    def element(self, num, den=None):
        if isinstance(num, int):
            num = (num, 0)
        x, y = num
        den = 1 if den is None else int(den)
        if den == 0:
            raise NotInvertible('zero denominator')
        if den < 0:
            x, y, den = -x, -y, -den
        g = gcd(gcd(x, y), den)
        return FieldElement(self, (x // g, y // g), den // g)

    def from_int(self, n):
        return FieldElement(self, (int(n), 0), 1)

    @property
    def w(self):
        return FieldElement(self, (0, 1), 1)

    def add(self, x, y):
        (x1, y1), d1 = x.num, x.den
        (x2, y2), d2 = y.num, y.den
        return self.element((x1 * d2 + x2 * d1, y1 * d2 + y2 * d1), d1 * d2)

    def mul(self, x, y):
        return self.element(self.ring_mul(x.num, y.num), x.den * y.den)

    def neg(self, x):
        return FieldElement(self, (-x.num[0], -x.num[1]), x.den)

    def inv(self, x):
        norm = self.ring_norm(x.num)
        if norm == 0:
            raise NotInvertible(f'zero has no inverse in {self.name}')
        cx, cy = self.conj(x.num)
        return self.element((cx * x.den, cy * x.den), norm)

    def ring_is_zero(self, r):
        return r == (0, 0)

    def is_one_denominator(self, den):
        return den == 1

    def ring_element(self, r):
        if isinstance(r, int):
            r = (r, 0)
        return FieldElement(self, tuple(r), 1)

    def denominator_element(self, x):
        return self.from_int(x.den)

    def norm(self, x):
        """Field norm as a Fraction."""
        return Fraction(self.ring_norm(x.num), x.den * x.den)

    def trace(self, x):
        return Fraction(2 * x.num[0] + self.trace_w * x.num[1], x.den)

    def format_ring(self, r):
        x, y = r
        terms = []
        if x or not y:
            terms.append(str(x))
        if y:
            coef = {1: '', -1: '-'}.get(y, f'{y}*')
            term = f'{coef}w'
            if terms and not term.startswith('-'):
                term = '+' + term
            terms.append(term)
        return ''.join(terms)

    def format_element(self, x):
        num = self.format_ring(x.num)
        if x.den == 1:
            return num
        if x.num[0] and x.num[1]:
            num = f'({num})'
        return f'{num}/{x.den}'

    def units(self):
        if self.d > 0:
            return super().units()
        units = [(1, 0), (-1, 0)]
        if self.d == -1:
            units += [(0, 1), (0, -1)]
        elif self.d == -3:
            # w is a primitive sixth root of unity
            units += [(0, 1), (0, -1), (-1, 1), (1, -1)]
        return [self.ring_element(u) for u in units]

    # ideals in Hermite normal form over {1, w}

    def ideal_from_generators(self, gens):
        vectors = []
        for g in gens:
            vectors.append(g)
            vectors.append(self.ring_mul(g, (0, 1)))
        if not any(v != (0, 0) for v in vectors):
            raise ZeroIdeal('the zero ideal has no Hermite normal form')
        return IntegralIdeal(self, hnf(vectors))

    def principal_ideal(self, r):
        return self.ideal_from_generators([r])

    def unit_ideal(self):
        return IntegralIdeal(self, (1, 0, 1))

    def ideal_mul(self, I, J):
        products = [
            self.ring_mul(u, v) for u in hnf_basis(I.data)
            for v in hnf_basis(J.data)
        ]
        return IntegralIdeal(self, hnf(products))

    def ideal_norm(self, I):
        return hnf_index(I.data)

    def ideal_contains(self, I, r):
        return hnf_contains(I.data, r)

    def ideal_is_closed(self, I):
        """Whether the module is stable under multiplication by w."""
        return all(
            hnf_contains(I.data, self.ring_mul(u, (0, 1)))
            for u in hnf_basis(I.data))

    def ideal_contained_in(self, I, J):
        return all(hnf_contains(J.data, u) for u in hnf_basis(I.data))

    def ideal_divide_integer(self, I, n):
        return IntegralIdeal(self, hnf_divide(I.data, n))

    def place_ideal(self, place):
        p = place.prime
        if place.f == 2:
            return IntegralIdeal(self, (p, 0, p))
        return IntegralIdeal(self, (p, -place.residue % p, 1))

    def conjugate_place(self, place):
        if place.f == 2 or place.e == 2:
            return place
        p = place.prime
        return Place(self, 'finite', prime=p,
                     residue=(self.trace_w - place.residue) % p)

    def ideal_valuation(self, I, place):
        p = place.prime
        P = self.place_ideal(place)
        Pbar = self.place_ideal(self.conjugate_place(place))
        n = 0
        while self.ideal_contained_in(I, P):
            if place.f == 2:
                I = self.ideal_divide_integer(I, p)
            else:
                I = self.ideal_divide_integer(self.ideal_mul(I, Pbar), p)
            n += 1
        return n

    def ideal_primes(self, I):
        return sorted(map(int, factorint(self.ideal_norm(I))))

    def format_ideal(self, I):
        a, b, c = I.data
        return f'<{a}, {self.format_ring((b, c))}>'

    # places

    def _roots_mod(self, p):
        """Roots of w's minimal polynomial X^2 - t X - n modulo p."""
        if p == 2:
            return [
                r for r in (0, 1)
                if (r * r - self.trace_w * r - self.norm_w) % 2 == 0
            ]
        roots = sqrt_mod(self.disc % p, p, all_roots=True) or []
        inv2 = (p + 1) // 2
        return sorted({(self.trace_w + s) * inv2 % p for s in roots})

    def primes_above(self, p):
        if not isinstance(p, int) or not isprime(p):
            raise NotPrime(f'{p} is not a prime')
        roots = self._roots_mod(p)
        if not roots:
            return [Place(self, 'finite', prime=p, e=1, f=2)]
        if len(roots) == 1:
            return [Place(self, 'finite', prime=p, residue=roots[0], e=2)]
        return [Place(self, 'finite', prime=p, residue=r) for r in roots]

    def place_from_element(self, p, r):
        """The place over ``p`` containing the ring element ``r``."""
        for place in self.primes_above(p):
            if self.ideal_contains(self.place_ideal(place), r):
                return place
        raise NotPrime(f'({p}, {self.format_ring(r)}) is not a prime ideal')

    def places_up_to(self, bound):
        places = []
        for p in primerange(2, bound + 1):
            places.extend(self.primes_above(p))
        return places

    def infinite_places(self):
        if self.d > 0:
            return [Place(self, 'real', index=0), Place(self, 'real', index=1)]
        return [Place(self, 'complex', index=0)]

    def residue_field_size(self, place):
        return place.prime**place.f

    def format_place(self, place):
        if place.is_archimedean:
            return f'{place.kind}{place.index}'
        p = place.prime
        if place.f == 2:
            return f'[{p}]'
        return f'[{p}, {self.format_ring((-place.residue % p, 1))}]'

    # valuations

    def _in_place(self, place, r):
        x, y = r
        p = place.prime
        if place.f == 2:
            return x % p == 0 and y % p == 0
        return (x + y * place.residue) % p == 0

    def ring_valuation(self, place, r):
        x, y = r
        p = place.prime
        k = min(v for v in (_v(p, x), _v(p, y)) if v is not None)
        if k:
            x, y = x // p**k, y // p**k
        n = place.e * k
        if place.f == 1 and self._in_place(place, (x, y)):
            n += 1 if place.e == 2 else int(
                multiplicity(p, abs(self.ring_norm((x, y)))))
        return n

    def element_valuation(self, place, x):
        return self.ring_valuation(place, x.num) - place.e * int(
            multiplicity(place.prime, x.den))

    def element_primes(self, x):
        primes = set(map(int, factorint(abs(self.ring_norm(x.num)))))
        primes |= set(map(int, factorint(x.den)))
        return sorted(primes)

    def uniformizer(self, place):
        self.check_place(place)
        p = place.prime
        if place.f == 2:
            return self.from_int(p)
        s = -place.residue % p
        for shift in (s, s + p):
            if self.ring_valuation(place, (shift, 1)) == 1:
                return self.ring_element((shift, 1))
        raise AssertionError(f'no uniformizer found at {place}')

    def residue(self, place, x):
        """Residue of ``x`` integral at ``place``.

        Returns an integer in ``[0, p)`` for places of degree one and a pair
        reduced modulo ``p`` (as an element ``a + b*w``) for inert places.
        """
        p = place.prime
        k = int(multiplicity(p, x.den))
        m = x.den // p**k
        num = x.num
        if k:
            if place.e == 1 and place.f == 1:
                # h = 1 mod P and h = 0 mod conj(P)^k makes num*h divisible
                # by p^k
                g = self.conj(self.uniformizer(place).num)
                gk = (1, 0)
                for _ in range(k):
                    gk = self.ring_mul(gk, g)
                scale = pow(gk[0] + gk[1] * place.residue, -1, p)
                num = self.ring_mul(num, (gk[0] * scale, gk[1] * scale))
            q = p**k
            assert num[0] % q == 0 and num[1] % q == 0, \
                f'{x} is not integral at {place}'
            num = (num[0] // q, num[1] // q)
        m_inv = pow(m, -1, p)
        if place.f == 2:
            return self.ring_element(
                (num[0] * m_inv % p, num[1] * m_inv % p))
        return self.from_int((num[0] + num[1] * place.residue) * m_inv % p)

    def residue_system(self, place):
        p = place.prime
        if place.f == 2:
            return [self.ring_element((a, b)) for b in range(p)
                    for a in range(p)]
        return [self.from_int(a) for a in range(p)]

    # archimedean embeddings

    def embeddings(self):
        root = np.emath.sqrt(self.disc)
        if self.d > 0:
            roots = [(self.trace_w + root) / 2, (self.trace_w - root) / 2]
            return [
                Embedding(self, place, float(r))
                for place, r in zip(self.infinite_places(), roots)
            ]
        return [
            Embedding(self, self.infinite_places()[0],
                      complex((self.trace_w + root) / 2))
        ]

    def evaluate(self, x, omega_value):
        a, b = x.num
        return (a + b * omega_value) / x.den

    def random_ring_element(self, rng, size=None, nonzero=False):
        size = size or self.sample_size
        while True:
            r = (rng.randint(-size, size), rng.randint(-size, size))
            if r != (0, 0) or not nonzero:
                return r
