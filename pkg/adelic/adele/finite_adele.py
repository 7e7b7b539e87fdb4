from ..local import LocalElement
from ..utils.errors import PlaceMismatch, SpecMismatch


def _denominator_places(tail):
    if tail.is_zero():
        return []
    return [v for v, n in tail.field.support(tail).items() if n < 0]


class FiniteAdele:
    """A finite adele described by finitely many exceptional components and
    a global tail.

    The component at a finite place ``v`` is ``exceptional[v]`` when present
    and the image of ``tail`` in ``K_v`` otherwise. Every place where the
    tail is not integral is listed among the exceptional places, so all
    components outside the exceptional set lie in ``R_v``. Exact entries
    equal to the tail at places where the tail is integral are dropped.

    Args:
        field (GlobalField): The global field.
        exceptional (dict): Finite places mapped to :class:`LocalElement`
            (field elements and integers are taken as exact components).
        tail (FieldElement | int): The global tail.
    """

    __slots__ = ('field', 'exceptional', 'tail')

    def __init__(self, field, exceptional=None, tail=1):
        tail = field.zero + tail
        components = {}
        for place, value in (exceptional or {}).items():
            if place.field != field or not place.is_finite:
                raise PlaceMismatch(f'{place} is not a finite place of '
                                    f'{field}')
            if not isinstance(value, LocalElement):
                value = LocalElement(place, field.zero + value)
            elif value.place != place:
                raise PlaceMismatch(f'component at {value.place} stored '
                                    f'under {place}')
            components[place] = value
        denominators = _denominator_places(tail)
        for place in denominators:
            components.setdefault(place, LocalElement(place, tail))
        pruned = {}
        for place, value in components.items():
            if (value.is_exact and value.approx == tail
                    and place not in denominators):
                continue
            pruned[place] = value
        self.field = field
        self.exceptional = dict(
            sorted(pruned.items(), key=lambda item: item[0].sort_key()))
        self.tail = tail

    @classmethod
    def zero(cls, field):
        return cls(field, {}, 0)

    @classmethod
    def one(cls, field):
        return cls(field, {}, 1)

    def component(self, place):
        if place in self.exceptional:
            return self.exceptional[place]
        return LocalElement(place, self.tail)

    @property
    def places(self):
        return list(self.exceptional)

    def _check(self, other):
        if not isinstance(other, FiniteAdele):
            return inj_K(self.field.zero + other)
        if other.field != self.field:
            raise SpecMismatch(f'adeles of {self.field} and {other.field}')
        return other

    def _combine(self, other, op, tail):
        places = set(self.exceptional) | set(other.exceptional)
        assert set(_denominator_places(tail)) <= places, \
            'restricted product invariant violated'
        return FiniteAdele(
            self.field,
            {v: op(self.component(v), other.component(v))
             for v in places}, tail)

    def __add__(self, other):
        other = self._check(other)
        return self._combine(other, lambda a, b: a + b,
                             self.tail + other.tail)

    __radd__ = __add__

    def __neg__(self):
        return FiniteAdele(self.field,
                           {v: -c for v, c in self.exceptional.items()},
                           -self.tail)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        return self._combine(other, lambda a, b: a * b,
                             self.tail * other.tail)

    __rmul__ = __mul__

    def is_integral(self):
        """Whether every component lies in ``R_v``."""
        return all(c.is_integer() for c in self.exceptional.values())

    def __eq__(self, other):
        if not isinstance(other, FiniteAdele):
            return NotImplemented
        return adele_eq(self, other)

    def __hash__(self):
        return hash((self.field.key, self.tail))

    def __str__(self):
        entries = ', '.join(f'{v}: {c}' for v, c in self.exceptional.items())
        if entries:
            return f'{{{entries}; tail {self.tail}}}'
        return f'{{tail {self.tail}}}'

    def __repr__(self):
        return f'FiniteAdele({self.field.name}, {self})'


def inj_K(k):
    """Diagonal embedding of a field element into the finite adeles."""
    return FiniteAdele(k.field, {}, k)


def adele_add(x, y):
    return x + y


def adele_mul(x, y):
    return x * y


def adele_neg(x):
    return -x


def adele_eq(x, y):
    """Equality of finite adeles.

    Tails must agree in ``K`` (distinct global elements differ at
    infinitely many places) and components must agree at every place of the
    union of the exceptional sets, compared at their joint precision.
    """
    if x.field != y.field:
        raise SpecMismatch(f'adeles of {x.field} and {y.field}')
    if x.tail != y.tail:
        return False
    places = set(x.exceptional) | set(y.exceptional)
    return all(x.component(v) == y.component(v) for v in places)
