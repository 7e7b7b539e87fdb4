from ..utils import get_root_logger
from ..utils.errors import SpecMismatch, UnsupportedField
from .forms import (form_of_ideal, ideal_of_form, principal_form,
                    reduced_forms)
from .fractional_ideal import FractionalIdeal


class IdealClass:
    """The class of a fractional ideal modulo principal ideals.

    For imaginary quadratic fields the class is identified by its reduced
    binary quadratic form; the class group of ``Q`` and ``Fq(t)`` is
    trivial and ``form`` is ``None``.
    """

    __slots__ = ('field', 'form', 'representative')

    def __init__(self, field, form, representative):
        self.field = field
        self.form = form
        self.representative = representative

    @property
    def key(self):
        return None if self.form is None else tuple(self.form)

    def is_principal(self):
        return self.form is None or self.form == principal_form(
            self.field.disc)

    def __mul__(self, other):
        if other.field != self.field:
            raise SpecMismatch(f'classes of {self.field} and {other.field}')
        return ideal_class_of(self.representative * other.representative)

    def inverse(self):
        return ideal_class_of(self.representative.inverse())

    def __pow__(self, n):
        return ideal_class_of(self.representative**n)

    def __eq__(self, other):
        if not isinstance(other, IdealClass):
            return NotImplemented
        return self.field == other.field and self.key == other.key

    def __hash__(self):
        return hash((self.field.key, self.key))

    def __str__(self):
        return 'principal' if self.form is None else str(self.form)

    def __repr__(self):
        return f'IdealClass({self.field.name}, {self})'


def _check_supported(field):
    if field.family == 'quadratic' and not field.is_imaginary:
        raise UnsupportedField(
            f'class groups of real quadratic fields such as {field} need '
            f'the fundamental unit')


def ideal_class_of(I):
    """The class of a fractional ideal."""
    field = I.field
    _check_supported(field)
    if field.family != 'quadratic':
        return IdealClass(field, None, I)
    return IdealClass(field, form_of_ideal(I.canonical().J).reduced(), I)


def principal_class(field):
    return ideal_class_of(FractionalIdeal.unit(field))


def class_of_form(field, form):
    """The class represented by a form, with the ideal of the form as
    representative."""
    J = ideal_of_form(field, form)
    return IdealClass(field, form.reduced(), FractionalIdeal.from_integral(J))


class ClassGroup:
    """The ideal class group of an imaginary quadratic field.

    Elements are the reduced forms of the field discriminant, in the order
    ``(a, |b|, -b)``; ``table[i][j]`` is the index of the product of
    elements ``i`` and ``j``.
    """

    def __init__(self, field):
        self.field = field
        self.discriminant = field.disc
        self.forms = reduced_forms(field.disc)
        self._index = {form: i for i, form in enumerate(self.forms)}
        self.table = [[self._index[f * g] for g in self.forms]
                      for f in self.forms]

    @property
    def order(self):
        return len(self.forms)

    def element(self, i):
        return class_of_form(self.field, self.forms[i])

    def index(self, c):
        return self._index[c.form]

    @property
    def identity(self):
        return self.element(self.index(principal_class(self.field)))

    def elements(self):
        return [self.element(i) for i in range(self.order)]

    def to_dict(self):
        return dict(
            discriminant=self.discriminant,
            order=self.order,
            forms=[list(f) for f in self.forms],
            table=[[i, j, k] for i, row in enumerate(self.table)
                   for j, k in enumerate(row)])


def class_group(field):
    """Ideal class group of an imaginary quadratic field.

    Raises:
        UnsupportedField: ``field`` is not imaginary quadratic.
    """
    if field.family != 'quadratic' or not field.is_imaginary:
        raise UnsupportedField(
            f'class groups are computed for imaginary quadratic fields, '
            f'not {field}')
    group = ClassGroup(field)
    get_root_logger().debug('class group of discriminant %d has order %d',
                            group.discriminant, group.order)
    return group
