from fractions import Fraction

import pytest
from sympy import legendre_symbol, primerange

from adelic.domains import build_field, irreducibles
from adelic.utils import NotInvertible, NotPrime, SpecMismatch, UnsupportedField


@pytest.fixture
def Q():
    return build_field(dict(type='Rationals'))


@pytest.fixture
def K():
    return build_field(dict(type='QuadraticField', d=-5))


@pytest.fixture
def F3():
    return build_field(dict(type='FunctionField', p=3))


def test_rationals(Q):
    x = Q.element(5, 6)
    assert str(x) == '5/6'
    assert x + Q.element(1, 6) == 1
    assert x * 6 == 5
    assert x.inverse() == Fraction(6, 5)
    assert str(-x) == '-5/6'
    assert x**-2 == Fraction(36, 25)
    assert Q.element(4, -6) == Q.element(-2, 3)
    with pytest.raises(NotInvertible):
        Q.zero.inverse()
    with pytest.raises(ZeroDivisionError):
        # NotInvertible is also a ZeroDivisionError
        x / 0


def test_quadratic_arithmetic(K):
    w = K.w
    assert w * w == -5
    assert (1 + w) * (1 - w) == 6
    assert str(1 + w) == '1+w'
    assert str(-w) == '-w'
    assert str(3 * w) == '3*w'
    assert str(K.element((2, -3))) == '2-3*w'
    assert str((1 + w) / 2) == '(1+w)/2'
    assert str(w / 2) == 'w/2'
    assert (1 + w).inverse() * (1 + w) == 1
    assert K.norm((1 + w) / 2) == Fraction(3, 2)
    assert K.trace(1 + w) == 2

    K3 = build_field(dict(type='QuadraticField', d=-3))
    w3 = K3.w
    assert w3 * w3 == w3 - 1
    assert len(K3.units()) == 6
    assert len(K.units()) == 2
    assert len(build_field(dict(type='QuadraticField', d=-1)).units()) == 4


@pytest.mark.parametrize('d', [0, 1, 4, -12])
def test_quadratic_rejects_d(d):
    with pytest.raises(UnsupportedField):
        build_field(dict(type='QuadraticField', d=d))


def test_real_quadratic_units_are_infinite():
    K2 = build_field(dict(type='QuadraticField', d=2))
    with pytest.raises(UnsupportedField):
        K2.units()


def test_mixed_fields(Q, K):
    with pytest.raises(SpecMismatch):
        Q.one + K.w


def test_quadratic_places(K):
    (P2, ) = K.primes_above(2)
    assert (P2.e, P2.f) == (2, 1)
    assert str(P2) == '[2, 1+w]'
    assert [str(v) for v in K.primes_above(3)] == ['[3, 2+w]', '[3, 1+w]']
    assert [str(v) for v in K.primes_above(7)] == ['[7, 4+w]', '[7, 3+w]']
    assert [str(v) for v in K.primes_above(5)] == ['[5, w]']
    # -5 is not a square modulo 11
    (P11, ) = K.primes_above(11)
    assert (P11.e, P11.f) == (1, 2)
    assert str(P11) == '[11]'
    assert P11.residue_field_size == 121
    with pytest.raises(NotPrime):
        K.primes_above(6)
    with pytest.raises(NotPrime):
        K.place_above(3)
    assert K.place_above(11) == P11
    assert [v.kind for v in K.infinite_places()] == ['complex']


def test_quadratic_places_up_to(K):
    places = K.places_up_to(7)
    # 2 ramified, 3 split, 5 ramified, 7 split
    assert len(places) == 6
    assert places == sorted(places)


def test_embeddings():
    K2 = build_field(dict(type='QuadraticField', d=2))
    values = [sigma(K2.w) for sigma in K2.embeddings()]
    assert values == pytest.approx([2**0.5, -2**0.5])
    assert all(sigma.is_real for sigma in K2.embeddings())

    K = build_field(dict(type='QuadraticField', d=-5))
    (sigma, ) = K.embeddings()
    assert sigma(K.w) == pytest.approx(complex(0, 5**0.5))

    Q = build_field(dict(type='Rationals'))
    (sigma, ) = Q.embeddings()
    assert sigma(Q.element(3, 4)) == 0.75


def test_residues(Q, K):
    (v5, ) = Q.primes_above(5)
    assert Q.residue(v5, Q.element(1, 2)) == 3
    (P2, ) = K.primes_above(2)
    for x in [K.w, 1 + K.w, K.from_int(7), (1 + K.w) * 3]:
        r = K.residue(P2, x)
        assert r in K.residue_system(P2)
    P3 = K.primes_above(3)[0]
    # w = 1 mod [3, 2+w]
    assert K.residue(P3, K.w) == 1
    assert K.residue(P3, K.w / 2) == 2


def test_function_field(F3):
    t = F3.t
    assert str(t * t + 1) == 't^2+1'
    assert str(2 * t) == '2*t'
    assert -t == 2 * t
    assert str((t * t + 1) / (t + 1)) == '(t^2+1)/(t+1)'
    assert str(1 / t) == '1/t'
    assert (t + 1) * 3 == 0
    assert [str(v) for v in F3.places_up_to(1)] == ['t', 't+1', 't+2']
    assert len(F3.places_up_to(2)) == 6
    (P, ) = F3.primes_above((t * t + 1).num)
    assert P.f == 2
    assert P.residue_field_size == 9
    with pytest.raises(NotPrime):
        F3.primes_above((t * t + 2).num)
    assert len(F3.units()) == 2
    with pytest.raises(UnsupportedField):
        F3.embeddings()


def test_function_field_over_f4():
    F4 = build_field(dict(type='FunctionField', p=2, e=2))
    g = F4.g
    assert g * g == g + 1
    assert str(g) == 'g'
    assert str(g * F4.t + 1) == 'g*t+1'
    assert str((g + 1) * F4.t) == '(g+1)*t'
    assert len(F4.places_up_to(1)) == 4
    assert F4.name == 'Fq(t;q=4)'


@pytest.mark.parametrize('d', [-1, -2, -3, -5, -23, -47, 2, 3, 5, 17])
def test_splitting_of_primes(d):
    K = build_field(dict(type='QuadraticField', d=d))
    for p in primerange(2, 100):
        places = K.primes_above(p)
        assert sum(v.e * v.f for v in places) == 2
        if K.disc % p == 0:
            kind = 'ramified'
        elif p == 2:
            kind = 'split' if K.disc % 8 == 1 else 'inert'
        else:
            kind = 'split' if legendre_symbol(K.disc % p, p) == 1 else 'inert'
        shape = {
            'ramified': [(2, 1)],
            'split': [(1, 1), (1, 1)],
            'inert': [(1, 2)]
        }[kind]
        assert [(v.e, v.f) for v in places] == shape, p
        assert all(v.residue_field_size == p**v.f for v in places)


@pytest.mark.parametrize('cfg,counts', [
    (dict(type='FunctionField', p=3), [3, 3, 8]),
    (dict(type='FunctionField', p=2, e=2), [4, 6, 20]),
])
def test_places_of_function_fields(cfg, counts):
    F = build_field(cfg)
    q = F.Fq.q
    for degree, count in enumerate(counts, start=1):
        primes = list(irreducibles(F.Fq, degree))
        assert len(primes) == count
        for g in primes:
            (v, ) = F.primes_above(g)
            assert (v.e, v.f) == (1, degree)
            assert v.residue_field_size == q**degree
    assert F.infinity.residue_field_size == q
