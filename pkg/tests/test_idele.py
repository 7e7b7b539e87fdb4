import random

import pytest

from adelic.adele import FiniteAdele, inj_K
from adelic.apis import random_idele
from adelic.classgroup import FractionalIdeal
from adelic.domains import build_field
from adelic.idele import (FiniteIdele, Idele, inj_units_K, inj_units_K_full,
                          is_in_kernel, map_to_fractional_ideals,
                          preimage_idele, project_to_finite,
                          to_add_valuations, try_invert)
from adelic.local import LocalElement
from adelic.utils import (InsufficientPrecision, NotAUnit, ShapeMismatch,
                          ZeroElement)


@pytest.fixture
def Q():
    return build_field(dict(type='Rationals'))


@pytest.fixture
def K():
    return build_field(dict(type='QuadraticField', d=-5))


def test_try_invert(Q):
    v2 = Q.place_above(2)
    x = try_invert(inj_K(Q.element(5, 6)))
    assert x.inverse == inj_K(Q.element(6, 5))
    y = try_invert(FiniteAdele(Q, {v2: 2}, 1))
    assert y.inverse == FiniteAdele(Q, {v2: Q.element(1, 2)}, 1)
    assert y * y.invert() == FiniteIdele.one(Q)
    assert y**-2 == y.invert() * y.invert()
    with pytest.raises(NotAUnit):
        try_invert(FiniteAdele(Q, {v2: 0}, 1))
    with pytest.raises(NotAUnit):
        try_invert(FiniteAdele.zero(Q))
    with pytest.raises(InsufficientPrecision):
        try_invert(
            FiniteAdele(Q, {v2: LocalElement(v2, Q.zero, prec=3)}, 1))


def test_inj_units(Q):
    with pytest.raises(ZeroElement):
        inj_units_K(Q.zero)
    assert inj_units_K(Q.one) == FiniteIdele.one(Q)
    x, y = Q.element(2, 3), Q.element(-7, 5)
    assert inj_units_K(x) * inj_units_K(y) == inj_units_K(x * y)
    assert inj_units_K(x) / inj_units_K(y) == inj_units_K(x / y)


def test_add_valuations(Q):
    v2, v3, v5 = (Q.place_above(p) for p in (2, 3, 5))
    assert to_add_valuations(inj_units_K(Q.element(5, 6))) == \
        {v2: -1, v3: -1, v5: 1}
    x = try_invert(FiniteAdele(Q, {v2: 4}, 3))
    assert to_add_valuations(x) == {v2: 2, v3: 1}
    assert to_add_valuations(FiniteIdele.one(Q)) == {}
    assert to_add_valuations(inj_units_K_full(Q.element(5, 6))) == \
        {v2: -1, v3: -1, v5: 1}


def test_map_to_fractional_ideals(Q, K):
    for k in [Q.element(5, 6), Q.from_int(-12), Q.element(1, 49)]:
        assert map_to_fractional_ideals(inj_units_K(k)) == \
            FractionalIdeal.principal(k)
    for k in [1 + K.w, K.w / 3, K.from_int(6)]:
        assert map_to_fractional_ideals(inj_units_K(k)) == \
            FractionalIdeal.principal(k)
    v2, v3 = Q.place_above(2), Q.place_above(3)
    x = try_invert(FiniteAdele(Q, {v2: 2, v3: Q.element(1, 3)}, 1))
    assert str(map_to_fractional_ideals(x)) == '(2/3)'


def test_preimage(Q, K):
    assert preimage_idele(FractionalIdeal.unit(Q)) == FiniteIdele.one(Q)
    I = FractionalIdeal.principal(Q.element(2, 3))
    assert str(preimage_idele(I)) == '{2: 2, 3: 1/3; tail 1}'
    P2, = K.primes_above(2)
    P3 = K.primes_above(3)[0]
    P7 = K.primes_above(7)[0]
    J = FractionalIdeal.from_exponents(K, {P2: 1, P3: -2, P7: 1})
    assert map_to_fractional_ideals(preimage_idele(J)) == J


def test_kernel(Q):
    assert is_in_kernel(Idele(FiniteIdele.one(Q), [3.5]))
    assert is_in_kernel(inj_units_K_full(Q.from_int(-1)))
    assert not is_in_kernel(inj_units_K(Q.from_int(2)))
    v2, v5 = Q.place_above(2), Q.place_above(5)
    x = try_invert(FiniteAdele(Q, {v2: 3, v5: Q.element(2, 7)}, -1))
    assert is_in_kernel(x)


def test_full_ideles(Q, K):
    k = Q.element(-3, 4)
    x = inj_units_K_full(k)
    assert project_to_finite(x) == inj_units_K(k)
    assert x.infinite == (-0.75, )
    assert (x * x.invert()).equals(Idele.one(Q))
    assert x / x == Idele.one(Q)
    with pytest.raises(NotAUnit):
        Idele(FiniteIdele.one(Q), [0.0])
    with pytest.raises(ShapeMismatch):
        Idele(FiniteIdele.one(K), [1.0, 1.0])
    assert str(Idele.one(Q)) == '{tail 1; inf 1.0}'


@pytest.mark.parametrize('cfg', [
    dict(type='Rationals'),
    dict(type='QuadraticField', d=-5),
    dict(type='QuadraticField', d=-23),
    dict(type='FunctionField', p=3),
])
def test_ideal_map_is_a_homomorphism(cfg):
    field = build_field(cfg)
    bound = 2 if field.family == 'function_field' else 20
    places = field.places_up_to(bound)
    rng = random.Random(3)
    for _ in range(10):
        x = random_idele(field, places, rng)
        y = random_idele(field, places, rng)
        assert map_to_fractional_ideals(x * y) == \
            map_to_fractional_ideals(x) * map_to_fractional_ideals(y)
        assert map_to_fractional_ideals(x.invert()) == \
            map_to_fractional_ideals(x).inverse()
