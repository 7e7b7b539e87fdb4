from fractions import Fraction

from ..utils.errors import PlaceMismatch, WrongFamily
from .value_group import INFINITY


def _check(v, x):
    if v.field != x.field:
        raise PlaceMismatch(f'place {v} of {v.field} applied to an element '
                            f'of {x.field}')
    v.field.check_place(v, finite=False)


def int_valuation(v, r):
    """The v-adic valuation of an element of the ring of integers.

    Args:
        v (Place): A finite place (or the infinite place of Fq(t)).
        r: A ring element of ``v.field`` or an integral field element.

    Returns:
        int | INFINITY: Exponent of ``v`` in the principal ideal ``(r)``;
            ``INFINITY`` iff ``r`` is zero.
    """
    field = v.field
    if hasattr(r, 'field'):
        _check(v, r)
        if not r.is_integral():
            raise PlaceMismatch(f'{r} is not in the ring of integers of '
                                f'{field}')
        r = r.num
    else:
        field.check_place(v, finite=False)
    if field.ring_is_zero(r):
        return INFINITY
    return field.ring_valuation(v, r)


def valuation(v, x):
    """The v-adic valuation ``val(num) - val(den)`` of a field element."""
    _check(v, x)
    if x.is_zero():
        return INFINITY
    return x.field.element_valuation(v, x)


def infty_valuation(x):
    """Valuation at the place at infinity of Fq(t): ``deg den - deg num``."""
    if x.field.family != 'function_field':
        raise WrongFamily(f'{x.field} has no nonarchimedean infinite place')
    return valuation(x.field.infinity, x)


def uniformizer(v):
    """An element of valuation exactly 1 at ``v``."""
    pi = v.field.uniformizer(v)
    assert valuation(v, pi) == 1
    return pi


def residue_field_size(v):
    return v.field.residue_field_size(v)


def absolute_value(v, x, base=None):
    """Multiplicative absolute value ``base ** -valuation``.

    Finite places and the infinite place of Fq(t) give an exact
    :class:`Fraction` (the default base is the size of the residue field,
    which normalizes the absolute value). Archimedean places give
    ``|sigma(x)|`` for real and ``|sigma(x)|**2`` for complex embeddings as
    floats.
    """
    if v.is_archimedean:
        if v.field != x.field:
            raise PlaceMismatch(f'{v} is not a place of {x.field}')
        value = x.field.embeddings()[v.index](x)
        return abs(value) if v.kind == 'real' else abs(value)**2
    val = valuation(v, x)
    if val is INFINITY:
        return Fraction(0)
    base = residue_field_size(v) if base is None else base
    return Fraction(base)**(-val)


def is_integral_at(v, x):
    """``|x|_v <= 1``, i.e. ``x`` lies in the valuation ring at ``v``."""
    return valuation(v, x) >= 0


def divides(v, r):
    """``|r|_v < 1`` iff ``v`` divides the principal ideal of ``r``."""
    return int_valuation(v, r) > 0
