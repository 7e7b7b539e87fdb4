import itertools
from fractions import Fraction

import pytest

from adelic.adele import FiniteAdele
from adelic.classgroup import (BinaryQF, FractionalIdeal, IdeleClass,
                               class_group, class_of_form, compose,
                               frac_factorization, frac_mul, from_exponents,
                               ideal_class_of, ideal_class_section,
                               idele_class_to_ideal_class, ideal_of_form,
                               is_in_kernel_subgroup, is_principal,
                               principal_class, principal_form,
                               reduced_forms)
from adelic.domains import build_field
from adelic.idele import (Idele, inj_units_K, inj_units_K_full,
                          preimage_idele, try_invert)
from adelic.utils import SpecMismatch, UnsupportedField, ZeroIdeal

# class numbers of Q(sqrt d) for squarefree -50 <= d <= -1
CLASS_NUMBERS = {
    -1: 1, -2: 1, -3: 1, -5: 2, -6: 2, -7: 1, -10: 2, -11: 1, -13: 2,
    -14: 4, -15: 2, -17: 4, -19: 1, -21: 4, -22: 2, -23: 3, -26: 6, -29: 6,
    -30: 4, -31: 3, -33: 4, -34: 4, -35: 2, -37: 2, -38: 6, -39: 4, -41: 8,
    -42: 4, -43: 1, -46: 4, -47: 5
}


def quadratic(d):
    return build_field(dict(type='QuadraticField', d=d))


@pytest.fixture
def Q():
    return build_field(dict(type='Rationals'))


@pytest.fixture
def K():
    return quadratic(-5)


def test_fractional_ideals(Q, K):
    v2, v3, v5 = (Q.place_above(p) for p in (2, 3, 5))
    assert frac_factorization(FractionalIdeal.principal(Q.element(5, 6))) \
        == {v2: -1, v3: -1, v5: 1}
    I = from_exponents(Q, {v2: 1, v3: -1})
    assert I == FractionalIdeal.principal(Q.element(2, 3))
    assert (I.a, I.J.data) == (3, 2)
    assert (I * I.inverse()).is_unit()
    assert I / I == FractionalIdeal.unit(Q)
    assert I**3 == FractionalIdeal.principal(Q.element(8, 27))
    assert I.norm() == Fraction(2, 3)
    assert not I.is_integral()
    assert str(I) == '(2/3)'
    with pytest.raises(ZeroIdeal):
        FractionalIdeal.principal(Q.zero)
    with pytest.raises(SpecMismatch):
        I * FractionalIdeal.unit(K)

    P2, = K.primes_above(2)
    P3, P3c = K.primes_above(3)
    six = FractionalIdeal.from_integral(K.principal_ideal((6, 0)))
    assert six.exponents == {P2: 2, P3: 1, P3c: 1}
    assert str(six) == '[2, 1+w]^2*[3, 2+w]*[3, 1+w]'
    assert str(FractionalIdeal.unit(K)) == '(1)'
    J = from_exponents(K, {P2: 1, P3: -2})
    assert J.norm() == Fraction(2, 9)
    assert J.canonical() == J
    assert J * from_exponents(K, {P3: 2}) == from_exponents(K, {P2: 1})


def test_principal_generators_over_pids(Q):
    assert is_principal(FractionalIdeal.principal(Q.element(-2, 3))) == \
        Q.element(2, 3)
    F = build_field(dict(type='FunctionField', p=3))
    t = F.t
    I = FractionalIdeal.principal(2 * t / (t * t + 1))
    g = is_principal(I)
    assert FractionalIdeal.principal(g) == I
    assert g == t / (t * t + 1)
    assert str(I) == '(t/(t^2+1))'


def test_quadratic_generators(K):
    P2, = K.primes_above(2)
    v2 = from_exponents(K, {P2: 1})
    assert is_principal(v2) is None
    g = is_principal(v2**2)
    assert g in (K.from_int(2), K.from_int(-2))
    I = FractionalIdeal.principal(1 + K.w)
    g = is_principal(I)
    assert g in (1 + K.w, -1 - K.w)
    J = FractionalIdeal.principal((1 + K.w) / 3)
    assert FractionalIdeal.principal(is_principal(J)) == J
    with pytest.raises(UnsupportedField):
        is_principal(FractionalIdeal.principal(quadratic(2).w))


def test_forms():
    f = BinaryQF(2, 2, 3)
    assert f.discriminant == -20
    assert f.is_reduced()
    assert not BinaryQF(2, -2, 3).is_reduced()
    assert BinaryQF(2, -2, 3).reduced() == f
    assert compose(f, f) == BinaryQF(1, 0, 5)
    assert BinaryQF(2, 1, 3) * BinaryQF(2, 1, 3) == BinaryQF(2, -1, 3)
    assert BinaryQF(2, 1, 3).inverse() == BinaryQF(2, -1, 3)
    assert principal_form(-23) == BinaryQF(1, 1, 6)
    assert principal_form(-20) == BinaryQF(1, 0, 5)
    assert str(BinaryQF(2, -1, 3)) == '(2,-1,3)'
    g, M = BinaryQF(6, -2, 1).reduce_with_transform()
    assert g == BinaryQF(1, 0, 5)
    x, y = 1, 1
    mx = M[0][0] * x + M[0][1] * y
    my = M[1][0] * x + M[1][1] * y
    assert g(x, y) == BinaryQF(6, -2, 1)(mx, my)


def test_reduced_forms():
    assert reduced_forms(-23) == [
        BinaryQF(1, 1, 6), BinaryQF(2, 1, 3), BinaryQF(2, -1, 3)
    ]
    assert reduced_forms(-20) == [BinaryQF(1, 0, 5), BinaryQF(2, 2, 3)]
    assert reduced_forms(-4) == [BinaryQF(1, 0, 1)]
    assert len(reduced_forms(-47)) == 5


@pytest.mark.parametrize('d,h', sorted(CLASS_NUMBERS.items()))
def test_class_numbers(d, h):
    assert class_group(quadratic(d)).order == h


def test_class_group_table():
    G = class_group(quadratic(-23))
    assert G.table == [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    assert G.identity == principal_class(G.field)
    data = G.to_dict()
    assert data['discriminant'] == -23
    assert data['forms'] == [[1, 1, 6], [2, 1, 3], [2, -1, 3]]
    assert [1, 1, 2] in data['table']


@pytest.mark.parametrize('d', [-5, -14, -23, -41, -47])
def test_class_group_axioms(d):
    G = class_group(quadratic(d))
    n = G.order
    assert G.table[0] == list(range(n))
    for row in G.table:
        assert sorted(row) == list(range(n))
    for i, j, k in itertools.product(range(n), repeat=3):
        assert G.table[G.table[i][j]][k] == G.table[i][G.table[j][k]]
        assert G.table[i][j] == G.table[j][i]


@pytest.mark.parametrize('d', [-5, -23, -47])
def test_forms_follow_ideal_products(d):
    K = quadratic(d)
    places = K.places_up_to(13)
    for P, R in itertools.combinations_with_replacement(places, 2):
        I = from_exponents(K, {P: 1})
        J = from_exponents(K, {R: 1})
        assert ideal_class_of(I).form * ideal_class_of(J).form == \
            ideal_class_of(I * J).form


def test_ideal_classes(K):
    P2, = K.primes_above(2)
    v2 = from_exponents(K, {P2: 1})
    c = ideal_class_of(v2)
    assert not c.is_principal()
    assert (c * c).is_principal()
    assert c.inverse() == c
    assert c**2 == principal_class(K)
    assert c == class_group(K).element(1)
    assert str(c) == '(2,2,3)'
    assert ideal_class_of(FractionalIdeal.principal(1 + K.w)).is_principal()
    Q = build_field(dict(type='Rationals'))
    assert ideal_class_of(FractionalIdeal.principal(Q.element(2, 3))) == \
        principal_class(Q)
    with pytest.raises(UnsupportedField):
        class_group(Q)
    with pytest.raises(UnsupportedField):
        class_group(quadratic(2))
    with pytest.raises(UnsupportedField):
        ideal_class_of(FractionalIdeal.unit(quadratic(2)))


def test_ideal_of_form():
    K = quadratic(-23)
    for form in reduced_forms(-23):
        J = ideal_of_form(K, form)
        assert class_of_form(K, form).form == form
        assert ideal_class_of(FractionalIdeal.from_integral(J)).form == form


@pytest.mark.parametrize('d', [-1, -5, -23, -47])
def test_section_round_trip(d):
    K = quadratic(d)
    for c in class_group(K).elements():
        x = ideal_class_section(c)
        assert idele_class_to_ideal_class(x) == c
        assert is_in_kernel_subgroup(x) == c.is_principal()


def test_idele_classes(Q, K):
    assert IdeleClass.one(Q) == IdeleClass(inj_units_K_full(Q.element(2, 3)))
    x = IdeleClass(preimage_idele(FractionalIdeal.principal(Q.from_int(7))))
    # 7 at the place 7 and 1 elsewhere is no diagonal element
    assert x != IdeleClass.one(Q)
    assert is_in_kernel_subgroup(x)
    # a kernel element that is not the image of a field element
    v5 = Q.place_above(5)
    y = IdeleClass(try_invert(FiniteAdele(Q, {v5: 2}, 1)))
    assert y != IdeleClass.one(Q)
    assert is_in_kernel_subgroup(y)
    assert (y * y.inverse()) == IdeleClass.one(Q)

    P2, = K.primes_above(2)
    z = IdeleClass(preimage_idele(from_exponents(K, {P2: 1})))
    assert z != IdeleClass.one(K)
    assert not is_in_kernel_subgroup(z)
    assert is_in_kernel_subgroup(z * z)
    for k in [1 + K.w, K.w / 3]:
        shifted = IdeleClass(z.representative * inj_units_K_full(k))
        assert shifted == z
        assert idele_class_to_ideal_class(shifted) == \
            idele_class_to_ideal_class(z)
        assert idele_class_to_ideal_class(
            IdeleClass(inj_units_K_full(k))).is_principal()
    with pytest.raises(SpecMismatch):
        z == IdeleClass.one(Q)


def test_kernel_witness(Q):
    member, witness = is_in_kernel_subgroup(IdeleClass.one(Q),
                                            return_witness=True)
    assert member
    assert witness.k == 1
    assert witness.unit == Idele.one(Q)
    x = IdeleClass(inj_units_K(Q.from_int(2)))
    member, witness = is_in_kernel_subgroup(x, return_witness=True)
    assert member
    assert witness.k == 2
    K = quadratic(-5)
    P2, = K.primes_above(2)
    z = IdeleClass(preimage_idele(from_exponents(K, {P2: 1})))
    assert is_in_kernel_subgroup(z, return_witness=True) == (False, None)


def test_function_field_idele_classes():
    F = build_field(dict(type='FunctionField', p=3))
    t = F.t
    assert IdeleClass.one(F) == IdeleClass(inj_units_K_full(t + 1))
    assert IdeleClass.one(F) == IdeleClass(inj_units_K_full(2 * t + 2))
    c = idele_class_to_ideal_class(IdeleClass(inj_units_K(t)))
    assert c.is_principal()


def test_frac_mul_function(Q):
    v2 = Q.place_above(2)
    I = from_exponents(Q, {v2: 1})
    assert frac_mul(I, I.inverse()) == FractionalIdeal.unit(Q)
