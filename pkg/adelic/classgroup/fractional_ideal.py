from fractions import Fraction

from ..domains import ExponentVector
from ..utils.errors import SpecMismatch, ZeroIdeal


def _clearing_multiplier(field, negative):
    """Smallest product of base primes ``m`` with ``(m) * N**-1`` integral,
    where ``N`` is the integral ideal with exponents ``negative``."""
    needed = {}
    for place, n in negative.items():
        k = -(-n // place.e)
        needed[place.prime] = max(needed.get(place.prime, 0), k)
    m = field.one
    for p, k in needed.items():
        m = m * field.prime_element(p)**k
    return m


class FractionalIdeal:
    """A nonzero fractional ideal ``a**-1 * J`` of the ring of integers.

    ``a`` is a nonzero ring element and ``J`` a nonzero integral ideal.
    The factorization into places is computed once and drives equality and
    the group operations; :meth:`from_exponents` rebuilds the canonical
    presentation from it.

    Args:
        field (GlobalField): The field.
        a (object): Nonzero ring element.
        J (IntegralIdeal): Nonzero integral ideal.
    """

    __slots__ = ('field', 'a', 'J', 'exponents')

    def __init__(self, field, a, J, exponents=None):
        if J.field != field:
            raise SpecMismatch(f'ideal of {J.field} used in {field}')
        if field.ring_is_zero(a):
            raise ZeroIdeal('the denominator of a fractional ideal is zero')
        if exponents is None:
            exponents = field.factor_ideal(J) - field.factor_ideal(
                field.principal_ideal(a))
        self.field = field
        self.a = a
        self.J = J
        self.exponents = ExponentVector(exponents)

    @classmethod
    def from_exponents(cls, field, exponents):
        """The ideal ``prod v**n_v`` for a finite map of exponents."""
        exponents = ExponentVector(exponents)
        for place in exponents:
            field.check_place(place)
        m = _clearing_multiplier(field, exponents.negative_part())
        shifted = exponents + field.support(m)
        J = field.ideal_from_exponents(shifted)
        return cls(field, m.num, J, exponents)

    @classmethod
    def principal(cls, k):
        """The principal fractional ideal ``k R``."""
        if k.is_zero():
            raise ZeroIdeal('the zero element generates the zero ideal')
        field = k.field
        return cls(field, field.denominator_element(k).num,
                   field.principal_ideal(k.num))

    @classmethod
    def unit(cls, field):
        return cls.from_exponents(field, {})

    @classmethod
    def from_integral(cls, J):
        return cls(J.field, J.field.one.num, J)

    def canonical(self):
        return FractionalIdeal.from_exponents(self.field, self.exponents)

    def _check(self, other):
        if other.field != self.field:
            raise SpecMismatch(f'ideals of {self.field} and {other.field}')
        return other

    def __mul__(self, other):
        other = self._check(other)
        return FractionalIdeal.from_exponents(
            self.field, self.exponents + other.exponents)

    def inverse(self):
        return FractionalIdeal.from_exponents(self.field, -self.exponents)

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def __pow__(self, n):
        return FractionalIdeal.from_exponents(self.field, n * self.exponents)

    def is_unit(self):
        return not self.exponents

    def is_integral(self):
        return self.exponents.is_nonnegative()

    def norm(self):
        """Absolute norm ``prod N(v)**n_v`` as a ``Fraction``."""
        result = Fraction(1)
        for place, n in self.exponents.items():
            result *= Fraction(self.field.residue_field_size(place))**n
        return result

    def __eq__(self, other):
        if not isinstance(other, FractionalIdeal):
            return NotImplemented
        return frac_eq(self, other)

    def __hash__(self):
        return hash((self.field.key, self.exponents))

    def __str__(self):
        if self.field.family != 'quadratic':
            return f'({is_principal(self)})'
        if not self.exponents:
            return '(1)'
        return '*'.join(
            str(v) if n == 1 else f'{v}^{n}'
            for v, n in self.exponents.items())

    def __repr__(self):
        return f'FractionalIdeal({self.field.name}, {self})'


def frac_factorization(I):
    return I.exponents


def from_exponents(field, exponents):
    return FractionalIdeal.from_exponents(field, exponents)


def frac_mul(I, J):
    return I * J


def frac_inv(I):
    return I.inverse()


def frac_eq(I, J):
    if I.field != J.field:
        raise SpecMismatch(f'ideals of {I.field} and {J.field}')
    return I.exponents == J.exponents


def is_principal(I):
    """A generator of ``I``, or ``None`` when ``I`` is not principal.

    Raises:
        UnsupportedField: Real quadratic fields.
    """
    field = I.field
    if field.family != 'quadratic':
        generator = field.one
        for place, n in I.exponents.items():
            generator = generator * field.uniformizer(place)**n
        return generator
    from .forms import ideal_generator
    return ideal_generator(I)
