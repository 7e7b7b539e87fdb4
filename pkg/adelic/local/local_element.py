from typing import NamedTuple

from ..utils.errors import (InsufficientPrecision, MathError, NotInvertible,
                            PlaceMismatch)
from ..valuation import INFINITY, valuation


class LocalElement:
    """An element of the completion ``K_v`` up to a known precision.

    The element is the coset ``approx + m_v**prec * R_v``; ``prec=None``
    means the coset is the single global element ``approx`` (exact).
    Precision is absolute and always at least 1. An approximation that
    already lies in ``m_v**prec`` is stored as zero.

    Args:
        place (Place): A nonarchimedean place.
        approx (FieldElement): Global representative of the coset.
        prec (int, optional): Absolute precision. Defaults to exact.
    """

    __slots__ = ('place', 'approx', 'prec')

    def __init__(self, place, approx, prec=None):
        if approx.field != place.field:
            raise PlaceMismatch(
                f'element of {approx.field} at a place of {place.field}')
        place.field.check_place(place, finite=False)
        if prec is not None:
            prec = int(prec)
            if prec < 1:
                raise InsufficientPrecision(
                    f'precision {prec} at {place} carries no information')
            if not approx.is_zero() and valuation(place, approx) >= prec:
                approx = place.field.zero
        self.place = place
        self.approx = approx
        self.prec = prec

    @classmethod
    def from_global(cls, place, x):
        return cls(place, x)

    @property
    def field(self):
        return self.place.field

    @property
    def is_exact(self):
        return self.prec is None

    @property
    def _prec(self):
        return INFINITY if self.prec is None else self.prec

    def lower_bound(self):
        """A provable lower bound of the valuation."""
        v = valuation(self.place, self.approx)
        return v if v < self._prec else self._prec

    def _check(self, other):
        if not isinstance(other, LocalElement):
            other = LocalElement(self.place,
                                 self.field.zero + other)
        if other.place != self.place:
            raise PlaceMismatch(f'{self.place} and {other.place}')
        return other

    @staticmethod
    def _make(place, approx, prec):
        return LocalElement(place, approx, None if prec is INFINITY else prec)

    def __add__(self, other):
        other = self._check(other)
        prec = min(self._prec, other._prec)
        return self._make(self.place, self.approx + other.approx, prec)

    __radd__ = __add__

    def __neg__(self):
        return LocalElement(self.place, -self.approx, self.prec)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if (self.is_exact and self.approx.is_zero()) or (
                other.is_exact and other.approx.is_zero()):
            return LocalElement(self.place, self.field.zero)
        prec = min(self._prec + other.lower_bound(),
                   other._prec + self.lower_bound())
        return self._make(self.place, self.approx * other.approx, prec)

    __rmul__ = __mul__

    def valuation(self):
        """Valuation of the element, when the precision determines it."""
        if self.approx.is_zero():
            if self.is_exact:
                return INFINITY
            raise InsufficientPrecision(
                f'only valuation >= {self.prec} is known at {self.place}')
        return valuation(self.place, self.approx)

    def inverse(self):
        if self.is_exact:
            if self.approx.is_zero():
                raise NotInvertible(f'zero is not invertible in the '
                                    f'completion at {self.place}')
            return LocalElement(self.place, self.approx.inverse())
        v = self.valuation()
        prec = self.prec - 2 * v
        if prec < 1:
            raise InsufficientPrecision(
                f'inverting an element of valuation {v} known to precision '
                f'{self.prec} at {self.place}')
        return LocalElement(self.place, self.approx.inverse(), prec)

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse()**(-n)
        result = LocalElement(self.place, self.field.one)
        for _ in range(n):
            result = result * self
        return result

    def is_integer(self):
        """Membership in the valuation ring ``R_v``."""
        if self.approx.is_zero():
            return True
        return valuation(self.place, self.approx) >= 0

    def with_precision(self, prec):
        """Coarsen to ``prec`` (no-op if already coarser)."""
        return LocalElement(self.place, self.approx, min(self._prec, prec))

    def __eq__(self, other):
        if not isinstance(other, LocalElement):
            return NotImplemented
        if other.place != self.place:
            return False
        diff = self.approx - other.approx
        if diff.is_zero():
            return True
        joint = min(self._prec, other._prec)
        if joint is INFINITY:
            return False
        return valuation(self.place, diff) >= joint

    def __hash__(self):
        return hash(self.place)

    def __str__(self):
        if self.is_exact:
            return str(self.approx)
        return f'{self.approx} prec {self.prec}'

    def __repr__(self):
        return f'LocalElement({self.place}: {self})'


class LocalIntegerWitness(NamedTuple):
    """A local element together with the evidence that it lies in ``R_v``:
    a lower bound of its valuation that is at least 0."""

    element: LocalElement
    lower_bound: object


def integer_witness(x):
    bound = x.lower_bound()
    if bound < 0:
        raise MathError(f'{x} is not integral at {x.place}')
    return LocalIntegerWitness(x, bound)


def from_global(v, x):
    return LocalElement.from_global(v, x)


def local_add(x, y):
    return x + y


def local_mul(x, y):
    return x * y


def local_neg(x):
    return -x


def local_inv(x):
    return x.inverse()


def local_valuation(x):
    return x.valuation()


def is_integer(x):
    return x.is_integer()
