class FqPoly:
    """Immutable univariate polynomial over a :class:`GaloisField`.

    Coefficients are stored from the constant term upwards without trailing
    zeros, so the zero polynomial has an empty coefficient tuple and degree
    -1.

    Args:
        field (GaloisField): The coefficient field.
        coeffs (Iterable[int]): Coefficients, constant term first.
    """

    __slots__ = ('field', 'coeffs')

    def __init__(self, field, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, field, c):
        return cls(field, (c, ))

    @classmethod
    def monomial(cls, field, degree, c=1):
        return cls(field, [0] * degree + [c])

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (1, )

    def is_monic(self):
        return self.lc == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, FqPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def sort_key(self):
        return (self.degree, tuple(reversed(self.coeffs)))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __add__(self, other):
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0, ) * (n - len(self.coeffs))
        b = other.coeffs + (0, ) * (n - len(other.coeffs))
        return FqPoly(F, [F.add(x, y) for x, y in zip(a, b)])

    def __neg__(self):
        return FqPoly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        F = self.field
        if not self.coeffs or not other.coeffs:
            return FqPoly(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return FqPoly(F, out)

    def scale(self, c):
        return FqPoly(self.field, [self.field.mul(c, a) for a in self.coeffs])

    def monic(self):
        if not self.coeffs or self.lc == 1:
            return self
        return self.scale(self.field.inv(self.lc))

    def __divmod__(self, other):
        if not other.coeffs:
            raise ZeroDivisionError('polynomial division by zero')
        F = self.field
        rem = list(self.coeffs)
        n = other.degree
        inv_lc = F.inv(other.lc)
        quo = [0] * max(len(rem) - n, 0)
        for k in range(len(rem) - 1, n - 1, -1):
            c = F.mul(rem[k], inv_lc)
            if c == 0:
                continue
            quo[k - n] = c
            for j, b in enumerate(other.coeffs):
                rem[k - n + j] = F.sub(rem[k - n + j], F.mul(c, b))
        return FqPoly(F, quo), FqPoly(F, rem[:n])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, n):
        assert n >= 0
        result = FqPoly(self.field, (1, ))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def pow_mod(self, n, modulus):
        """Compute ``self ** n % modulus`` by repeated squaring."""
        result = FqPoly(self.field, (1, )) % modulus
        base = self % modulus
        while n:
            if n & 1:
                result = result * base % modulus
            base = base * base % modulus
            n >>= 1
        return result

    def derivative(self):
        F = self.field
        return FqPoly(F, [
            F.mul(F.from_int(k), c) for k, c in enumerate(self.coeffs)
        ][1:])

    def __call__(self, x):
        F = self.field
        value = 0
        for c in reversed(self.coeffs):
            value = F.add(F.mul(value, x), c)
        return value

    def format(self, var='t'):
        F = self.field
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            coef = F.format(c)
            if k == 0:
                terms.append(coef)
                continue
            if '+' in coef:
                coef = f'({coef})'
            power = var if k == 1 else f'{var}^{k}'
            terms.append(power if c == 1 else f'{coef}*{power}')
        return '+'.join(terms) if terms else '0'

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f'FqPoly({self.format()} over {self.field!r})'


def poly_gcd(f, g):
    """Monic greatest common divisor (zero if both inputs are zero)."""
    while g:
        f, g = g, f % g
    return f.monic()


def poly_gcdex(f, g):
    """Extended Euclid: return ``(s, t, h)`` with ``s*f + t*g = h`` monic."""
    F = f.field
    zero, one = FqPoly(F), FqPoly(F, (1, ))
    r0, r1, s0, s1, t0, t1 = f, g, one, zero, zero, one
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return s0, t0, r0
    inv = F.inv(r0.lc)
    return s0.scale(inv), t0.scale(inv), r0.scale(inv)
