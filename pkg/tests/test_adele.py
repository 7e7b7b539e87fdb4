import random

import pytest

from adelic.adele import (Adele, BasicOpenSpec, FiniteAdele, LocalizationForm,
                          adele_add, adele_eq, embed_infinite,
                          from_localization_form, inj_K, inj_K_full,
                          is_in_basic_open, make_adele, to_localization_form)
from adelic.apis import random_finite_adele
from adelic.domains import build_field
from adelic.local import LocalElement
from adelic.utils import (InsufficientPrecision, MathError, ShapeMismatch,
                          SpecMismatch)


@pytest.fixture
def Q():
    return build_field(dict(type='Rationals'))


@pytest.fixture
def K():
    return build_field(dict(type='QuadraticField', d=-5))


def test_inj_K(Q):
    x = inj_K(Q.element(5, 6))
    assert [str(v) for v in x.places] == ['2', '3']
    assert x.tail == Q.element(5, 6)
    assert all(c.is_exact for c in x.exceptional.values())
    assert inj_K(Q.from_int(2)) + inj_K(Q.from_int(3)) == inj_K(Q.from_int(5))
    assert str(inj_K(Q.from_int(7))) == '{tail 7}'


def test_componentwise_arithmetic(Q):
    v2, v3 = Q.place_above(2), Q.place_above(3)
    x = FiniteAdele(Q, {v2: Q.element(1, 2)}, 1)
    y = FiniteAdele(Q, {v3: Q.element(1, 3)}, 1)
    assert str(x * y) == '{2: 1/2, 3: 1/3; tail 1}'
    assert (x * y).component(v3).approx == Q.element(1, 3)
    assert (x * y).component(Q.place_above(5)).approx == 1
    zero = x + (-x)
    assert zero == FiniteAdele.zero(Q)
    assert zero.places == []
    assert str(zero) == '{tail 0}'
    assert x - x == FiniteAdele.zero(Q)
    assert 2 * x == FiniteAdele(Q, {v2: 1}, 2)


def test_equality(Q):
    v2, v3 = Q.place_above(2), Q.place_above(3)
    half = inj_K(Q.element(1, 2))
    assert half != FiniteAdele(Q, {v2: Q.element(1, 2) + 8},
                               Q.element(1, 2))
    assert half != inj_K(Q.element(3, 2))
    # an exact entry equal to an integral tail is not stored
    y = FiniteAdele(Q, {v3: Q.element(1, 2)}, Q.element(1, 2))
    assert y.places == [v2]
    assert y == half
    # equality at the joint precision
    z = FiniteAdele(Q, {v3: LocalElement(v3, Q.from_int(10), prec=2)}, 1)
    assert z == FiniteAdele(Q, {v3: 1}, 1)
    assert z != FiniteAdele(Q, {v3: 4}, 1)
    K = build_field(dict(type='QuadraticField', d=-5))
    with pytest.raises(SpecMismatch):
        half == inj_K(K.one)


def test_restricted_product_is_kept(K):
    rng = random.Random(0)
    places = K.places_up_to(20)
    x = inj_K(K.one)
    for i in range(200):
        y = random_finite_adele(K, places, rng)
        op = rng.choice(['add', 'mul', 'sub'])
        if op == 'add':
            x = x + y
        elif op == 'mul':
            x = x * y
        else:
            x = x - y
        if x.tail.is_zero() or i % 5 == 4:
            x = inj_K(K.one)
        for v, n in K.support(x.tail).items():
            if n < 0:
                assert v in x.exceptional


def test_basic_opens(Q):
    v3 = Q.place_above(3)
    integral = BasicOpenSpec.integral(Q)
    assert is_in_basic_open(inj_K(Q.from_int(3)), integral)
    assert not is_in_basic_open(inj_K(Q.element(1, 2)), integral)
    U = BasicOpenSpec(Q, {v3: (Q.from_int(2), 1)})
    assert is_in_basic_open(FiniteAdele(Q, {v3: 5}, 1), U)
    assert not is_in_basic_open(FiniteAdele(Q, {v3: 4}, 1), U)
    V = BasicOpenSpec(Q, {v3: (2, 3)})
    x = FiniteAdele(Q, {v3: LocalElement(v3, Q.from_int(2), prec=1)}, 1)
    with pytest.raises(InsufficientPrecision):
        is_in_basic_open(x, V)
    K = build_field(dict(type='QuadraticField', d=-5))
    with pytest.raises(SpecMismatch):
        is_in_basic_open(inj_K(K.one), U)


def test_localization_forms(Q):
    v2 = Q.place_above(2)
    x = FiniteAdele(Q, {v2: Q.element(1, 2)}, 3)
    form = to_localization_form(x)
    assert form.denominator == 2
    assert form.numerator == FiniteAdele(Q, {v2: 1}, 6)
    assert str(form) == '{2: 1; tail 6} / 2'
    assert from_localization_form(form) == x
    assert from_localization_form(LocalizationForm(inj_K(Q.from_int(6)),
                                                   2)) == inj_K(Q.from_int(3))
    assert LocalizationForm(inj_K(Q.from_int(1)), 2) == \
        LocalizationForm(inj_K(Q.from_int(2)), 4)
    with pytest.raises(MathError):
        LocalizationForm(inj_K(Q.element(1, 2)), 1)
    with pytest.raises(MathError):
        LocalizationForm(inj_K(Q.one), 0)


@pytest.mark.parametrize('cfg', [
    dict(type='Rationals'),
    dict(type='QuadraticField', d=-5),
    dict(type='FunctionField', p=3),
])
def test_localization_round_trip(cfg):
    field = build_field(cfg)
    bound = 2 if field.family == 'function_field' else 20
    places = field.places_up_to(bound)
    rng = random.Random(2)
    for _ in range(20):
        x = random_finite_adele(field, places, rng)
        form = to_localization_form(x)
        assert form.numerator.is_integral()
        assert from_localization_form(form) == x


def test_localization_in_ramified_place(K):
    x = inj_K((1 + K.w) / 2)
    form = to_localization_form(x)
    assert form.denominator == 2
    assert from_localization_form(form) == x


def test_full_adeles(Q):
    assert inj_K_full(Q.one).infinite == (1.0, )
    K2 = build_field(dict(type='QuadraticField', d=2))
    assert inj_K_full(K2.w).infinite == pytest.approx((2**0.5, -2**0.5))
    F = build_field(dict(type='FunctionField', p=3))
    inf, = inj_K_full(F.t).infinite
    assert inf.is_exact
    assert inf.valuation() == -1

    a, b = inj_K_full(Q.from_int(2)), inj_K_full(Q.from_int(3))
    assert a * b == inj_K_full(Q.from_int(6))
    assert a + b == inj_K_full(Q.from_int(5))
    assert str(a) == '{tail 2; inf 2.0}'


def test_full_adele_shapes(Q, K):
    with pytest.raises(ShapeMismatch):
        Adele(inj_K(Q.one), [1.0, 2.0])
    with pytest.raises(ShapeMismatch):
        Adele(inj_K(K.one), [1.0, 2.0])
    with pytest.raises(ShapeMismatch):
        Adele(inj_K(Q.one), [1j])
    assert Adele(inj_K(K.one), [1]).infinite == (complex(1), )


def test_archimedean_tolerance(Q):
    one = inj_K_full(Q.one)
    assert Adele(inj_K(Q.one), [1.0 + 1e-12]) == one
    assert Adele(inj_K(Q.one), [1.0 + 1e-6]) != one
    assert Adele(inj_K(Q.one), [1.0 + 1e-6]).equals(one, tol=1e-3)


def test_functional_forms(Q):
    a, b = Q.element(1, 6), Q.element(5, 4)
    assert adele_eq(adele_add(inj_K(a), inj_K(b)), inj_K(a + b))
    assert not adele_eq(inj_K(a), inj_K(b))
    assert make_adele(inj_K(a), embed_infinite(a)) == inj_K_full(a)
