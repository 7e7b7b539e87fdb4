from functools import lru_cache

from sympy import isprime

from ..utils.errors import UnsupportedField

# Conway polynomials C(p, e), coefficients from the constant term upwards.
CONWAY_POLYNOMIALS = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (7, 4): (3, 4, 5, 0, 1),
    (11, 2): (2, 7, 1),
    (11, 3): (9, 2, 0, 1),
    (11, 4): (2, 10, 8, 0, 1),
    (13, 2): (2, 12, 1),
    (13, 3): (11, 2, 0, 1),
    (13, 4): (2, 12, 3, 0, 1),
}

MAX_FIELD_SIZE = 2**16


class GaloisField:
    """The finite field with ``q = p**e`` elements.

    Elements are the integers ``0 .. q-1``; the base ``p`` digits of an
    element are its coefficients in the basis ``1, g, .., g**(e-1)`` where
    ``g`` is a root of the Conway polynomial ``C(p, e)``. For ``e == 1``
    this is plain arithmetic modulo ``p``.

    Use :func:`galois_field` to get a shared instance; the exp/log tables of
    the extension fields are built once per ``(p, e)``.

    Args:
        p (int): Characteristic.
        e (int): Degree over the prime field. Defaults to 1.
    """

    def __init__(self, p, e=1):
        if not isprime(p):
            raise UnsupportedField(f'{p} is not a prime')
        if e < 1:
            raise UnsupportedField(f'invalid extension degree {e}')
        if p**e > MAX_FIELD_SIZE:
            raise UnsupportedField(f'q = {p}^{e} exceeds {MAX_FIELD_SIZE}')
        if e > 1 and (p, e) not in CONWAY_POLYNOMIALS:
            raise UnsupportedField(
                f'no Conway polynomial shipped for q = {p}^{e}')
        self.p = p
        self.e = e
        self.q = p**e
        if e > 1:
            self.modulus = CONWAY_POLYNOMIALS[(p, e)]
            self._exp, self._log = self._build_tables()

    def _build_tables(self):
        p, e, q = self.p, self.e, self.q
        exp = [0] * (q - 1)
        log = [None] * q
        digits = [1] + [0] * (e - 1)
        for i in range(q - 1):
            value = self.from_digits(digits)
            assert log[value] is None, \
                f'C({p}, {e}) is not primitive'
            exp[i] = value
            log[value] = i
            # multiply by g and reduce with g^e = -(c_0 + .. + c_{e-1} g^(e-1))
            top = digits[-1]
            digits = [0] + digits[:-1]
            for k in range(e):
                digits[k] = (digits[k] - top * self.modulus[k]) % p
        return exp, log

    def __repr__(self):
        return f'GF({self.q})'

    def __eq__(self, other):
        return isinstance(other, GaloisField) and (self.p, self.e) == (
            other.p, other.e)

    def __hash__(self):
        return hash(('GF', self.p, self.e))

    @property
    def gen(self):
        """The generator ``g`` (``0`` digits except a 1 at position 1)."""
        return self.p if self.e > 1 else None

    def digits(self, a):
        ds = []
        for _ in range(self.e):
            a, d = divmod(a, self.p)
            ds.append(d)
        return ds

    def from_digits(self, ds):
        value = 0
        for d in reversed(ds):
            value = value * self.p + d % self.p
        return value

    def from_int(self, n):
        """Image of a rational integer in the prime field."""
        return n % self.p

    def add(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        return self.from_digits(
            [x + y for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a):
        if self.e == 1:
            return -a % self.p
        return self.from_digits([-x for x in self.digits(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self.e == 1:
            return a * b % self.p
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError('inverse of zero in ' + repr(self))
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[-self._log[a] % (self.q - 1)]

    def pow(self, a, n):
        if a == 0:
            return 0 if n > 0 else 1
        if self.e == 1:
            return pow(a, n % (self.p - 1), self.p)
        return self._exp[self._log[a] * n % (self.q - 1)]

    def pth_root(self, a):
        return self.pow(a, self.q // self.p)

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    def format(self, a):
        if self.e == 1:
            return str(a)
        terms = []
        for k, d in reversed(list(enumerate(self.digits(a)))):
            if d == 0:
                continue
            if k == 0:
                terms.append(str(d))
                continue
            power = 'g' if k == 1 else f'g^{k}'
            terms.append(power if d == 1 else f'{d}*{power}')
        return '+'.join(terms) if terms else '0'


@lru_cache(maxsize=None)
def galois_field(p, e=1):
    return GaloisField(p, e)
