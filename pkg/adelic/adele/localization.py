from math import lcm

from ..domains import poly_gcd
from ..utils.errors import MathError, SpecMismatch
from .finite_adele import FiniteAdele, inj_K


class LocalizationForm:
    """A finite adele written as ``numerator / denominator``.

    ``numerator`` is a finitely described element of ``prod R_v`` (all
    components integral, tail in the ring of integers) and ``denominator``
    a nonzero element of the ring of integers, given as an integral field
    element.
    """

    __slots__ = ('numerator', 'denominator')

    def __init__(self, numerator, denominator):
        denominator = numerator.field.zero + denominator
        if denominator.is_zero() or not denominator.is_integral():
            raise MathError(f'denominator {denominator} is not a nonzero '
                            'element of the ring of integers')
        if not numerator.tail.is_integral() or not numerator.is_integral():
            raise MathError(f'numerator {numerator} is not in prod R_v')
        self.numerator = numerator
        self.denominator = denominator

    @property
    def field(self):
        return self.numerator.field

    def __add__(self, other):
        self._check(other)
        return LocalizationForm(
            self.numerator * other.denominator +
            other.numerator * self.denominator,
            self.denominator * other.denominator)

    def __mul__(self, other):
        self._check(other)
        return LocalizationForm(self.numerator * other.numerator,
                                self.denominator * other.denominator)

    def _check(self, other):
        if other.field != self.field:
            raise SpecMismatch(f'{self.field} and {other.field}')

    def __eq__(self, other):
        if not isinstance(other, LocalizationForm):
            return NotImplemented
        self._check(other)
        return (self.numerator * other.denominator ==
                other.numerator * self.denominator)

    def __hash__(self):
        return hash(self.field.key)

    def __str__(self):
        return f'{self.numerator} / {self.denominator}'

    def __repr__(self):
        return f'LocalizationForm({self.field.name}, {self})'


def _clearing_denominator(x):
    """A nonzero ring element ``s`` with ``s * x`` in ``prod R_v``."""
    field = x.field
    s = x.tail.den
    for place, component in x.exceptional.items():
        bound = component.lower_bound()
        if bound >= 0:
            continue
        if field.family == 'function_field':
            f = place.prime**(-bound)
            s = s * f // poly_gcd(s, f)
        else:
            # v(p) = e at a place over p
            s = lcm(s, place.prime**(-(bound // place.e)))
    if field.family == 'function_field':
        return field.ring_element(s)
    return field.from_int(s)


def to_localization_form(x):
    """Present a finite adele as an element of ``(prod R_v)[1/(R - 0)]``."""
    s = _clearing_denominator(x)
    return LocalizationForm(x * inj_K(s), s)


def from_localization_form(form):
    return form.numerator * inj_K(form.denominator.inverse())


__all__ = [
    'FiniteAdele', 'LocalizationForm', 'to_localization_form',
    'from_localization_form'
]
