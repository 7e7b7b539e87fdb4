import random

import pytest

from adelic.domains import (FqPoly, factor, galois_field, irreducibles,
                            is_irreducible, poly_gcd)
from adelic.domains.poly import poly_gcdex
from adelic.domains.poly_factor import edf, sqf_list
from adelic.utils import UnsupportedField


def P(F, *coeffs):
    return FqPoly(F, coeffs)


def test_galois_prime_field():
    F = galois_field(5)
    assert F.q == 5
    assert F.mul(3, 4) == 2
    assert F.inv(2) == 3
    assert F.neg(1) == 4
    with pytest.raises(ZeroDivisionError):
        F.inv(0)
    assert galois_field(5) is F


def test_galois_extension_field():
    F = galois_field(2, 2)
    g = F.gen
    assert F.mul(g, g) == F.add(g, 1)
    assert F.format(F.add(g, 1)) == 'g+1'
    for a in F.units():
        assert F.mul(a, F.inv(a)) == 1
    F9 = galois_field(3, 2)
    # the multiplicative group is cyclic of order 8 and generated by g
    powers = {F9.pow(F9.gen, k) for k in range(8)}
    assert powers == set(F9.units())


@pytest.mark.parametrize('p,e', [(4, 1), (2, 0), (17, 2), (2, 17)])
def test_galois_rejects(p, e):
    with pytest.raises(UnsupportedField):
        galois_field(p, e)


def test_poly_arithmetic():
    F = galois_field(3)
    f = P(F, 1, 0, 1)  # t^2+1
    g = P(F, 1, 1)  # t+1
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree
    assert str(f) == 't^2+1'
    assert str(-g) == '2*t+2'
    assert (g**3) == P(F, 1, 0, 0, 1)
    assert P(F, 0, 0, 0) == FqPoly(F)
    assert FqPoly(F).degree == -1
    assert g.derivative() == P(F, 1)
    assert P(F, 2, 2).monic() == g


def test_gcd():
    F = galois_field(5)
    a = P(F, 1, 1) * P(F, 2, 1)
    b = P(F, 1, 1) * P(F, 3, 0, 1)
    assert poly_gcd(a, b) == P(F, 1, 1)
    s, t, h = poly_gcdex(a, b)
    assert s * a + t * b == h
    assert h == P(F, 1, 1)


def test_irreducibles():
    F2 = galois_field(2)
    assert len(list(irreducibles(F2, 3))) == 2
    assert len(list(irreducibles(F2, 4))) == 3
    assert len(list(irreducibles(galois_field(3), 2))) == 3
    assert len(list(irreducibles(galois_field(2, 2), 1))) == 4
    assert not is_irreducible(P(F2, 1, 0, 1))
    assert is_irreducible(P(F2, 1, 1, 1))
    assert not is_irreducible(P(F2, 1))


def test_sqf_list():
    F = galois_field(3)
    t = P(F, 0, 1)
    f = (t * t * (t + P(F, 1))).scale(2)
    lc, parts = sqf_list(f)
    assert lc == 2
    assert sorted((g.coeffs, k) for g, k in parts) == [((0, 1), 2),
                                                       ((1, 1), 1)]
    # t^3 + 1 = (t+1)^3 in characteristic 3
    lc, parts = sqf_list(P(F, 1, 0, 0, 1))
    assert parts == [(P(F, 1, 1), 3)]


@pytest.mark.parametrize('p,e', [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2)])
def test_factor_reconstructs(p, e):
    F = galois_field(p, e)
    rng = random.Random(p * 10 + e)
    for _ in range(10):
        coeffs = [rng.randrange(F.q) for _ in range(6)] + [1]
        f = FqPoly(F, coeffs).scale(rng.randrange(1, F.q))
        lc, factors = factor(f)
        product = P(F, lc)
        for g, k in factors:
            assert is_irreducible(g)
            assert g.is_monic()
            product = product * g**k
        assert product == f


def test_factor_is_seed_independent():
    F = galois_field(3)
    # product of the three monic irreducible quadratics over F3
    f = P(F, 1)
    for g in irreducibles(F, 2):
        f = f * g
    results = {tuple(g.coeffs for g, _ in factor(f, seed)[1])
               for seed in range(4)}
    assert len(results) == 1


def test_edf_splits_linear_factors():
    F = galois_field(7)
    f = P(F, 1)
    for c in range(1, 5):
        f = f * P(F, c, 1)
    factors = edf(f, 1, random.Random(0))
    assert sorted(g.coeffs for g in factors) == [(c, 1) for c in range(1, 5)]
