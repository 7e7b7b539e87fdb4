import pytest

from adelic.domains import build_field
from adelic.local import (LocalElement, digits, format_expansion, from_global,
                          integer_witness, is_integer, local_add, local_inv,
                          local_valuation)
from adelic.utils import (InsufficientPrecision, MathError, NotInvertible,
                          PlaceMismatch)
from adelic.valuation import INFINITY, valuation

# (p, precision of the left operand, precision of the right operand)
PRECISION_CASES = [(p, m, n) for p in (2, 3, 5) for m in range(1, 5)
                   for n in range(1, 5) if p**(m + n) <= 729]


@pytest.fixture
def Q():
    return build_field(dict(type='Rationals'))


@pytest.fixture
def v5(Q):
    return Q.place_above(5)


def test_precision_arithmetic(Q, v5):
    a = LocalElement(v5, Q.from_int(3), prec=4)
    b = LocalElement(v5, Q.from_int(10), prec=2)
    assert (a + b).prec == 2
    assert (a + b).approx == 13
    assert (a * b).prec == 2
    assert (a * b).approx == 30
    exact = LocalElement(v5, Q.from_int(7))
    assert (exact * exact).is_exact
    assert (a * 5).prec == 5
    assert (a * LocalElement(v5, Q.zero)).is_exact


def test_canonical_zero(Q, v5):
    x = LocalElement(v5, Q.from_int(25), prec=2)
    assert x.approx == 0
    assert x.lower_bound() == 2
    with pytest.raises(InsufficientPrecision):
        x.valuation()
    assert LocalElement(v5, Q.zero).valuation() is INFINITY
    with pytest.raises(InsufficientPrecision):
        LocalElement(v5, Q.one, prec=0)


def test_inverse(Q, v5):
    x = LocalElement(v5, Q.from_int(10), prec=4)
    inv = x.inverse()
    assert inv.prec == 2
    assert inv.approx == Q.element(1, 10)
    with pytest.raises(InsufficientPrecision):
        LocalElement(v5, Q.from_int(25), prec=3).inverse()
    with pytest.raises(NotInvertible):
        LocalElement(v5, Q.zero).inverse()
    assert LocalElement(v5, Q.from_int(2)).inverse().approx == \
        Q.element(1, 2)


def test_equality(Q, v5):
    assert LocalElement(v5, Q.from_int(3), prec=2) == \
        LocalElement(v5, Q.from_int(28))
    assert LocalElement(v5, Q.from_int(3), prec=2) != \
        LocalElement(v5, Q.from_int(8))
    assert LocalElement(v5, Q.from_int(3)) != LocalElement(v5, Q.from_int(28))
    with pytest.raises(PlaceMismatch):
        LocalElement(v5, Q.one) + LocalElement(Q.place_above(3), Q.one)


def test_integers(Q, v5):
    assert is_integer(LocalElement(v5, Q.element(1, 2)))
    assert not is_integer(LocalElement(v5, Q.element(1, 5)))
    assert is_integer(LocalElement(v5, Q.from_int(25), prec=1))
    witness = integer_witness(LocalElement(v5, Q.from_int(50)))
    assert witness.lower_bound == 2
    with pytest.raises(MathError):
        integer_witness(LocalElement(v5, Q.element(1, 5)))


def test_expansions(Q, v5):
    x = LocalElement(v5, Q.from_int(23), prec=3)
    assert digits(x) == [(0, 3), (1, 4)]
    assert format_expansion(x) == '3 + 4*5 + O(5^3)'
    assert format_expansion(LocalElement(v5, Q.from_int(-1)), terms=3) == \
        '4 + 4*5 + 4*5^2 + ...'
    assert format_expansion(LocalElement(v5, Q.element(1, 5))) == '5^-1'
    assert format_expansion(LocalElement(v5, Q.zero)) == '0'


def test_expansion_at_infinity():
    F = build_field(dict(type='FunctionField', p=3))
    t = F.t
    x = LocalElement(F.infinity, t + 1)
    assert x.valuation() == -1
    assert format_expansion(x) == 't + 1'


def test_functional_forms(Q, v5):
    x = from_global(v5, Q.element(25, 3))
    assert x.prec is None
    assert local_valuation(x) == 2
    assert local_add(from_global(v5, Q.from_int(1)),
                     from_global(v5, Q.from_int(2))) == from_global(
                         v5, Q.from_int(3))
    y = local_inv(LocalElement(v5, Q.from_int(3), 4))
    assert y.prec == 4
    assert y == LocalElement(v5, Q.element(1, 3), 4)


def _in_coset(place, exact, claimed):
    """Whether the exact value lies in the coset claimed by ``claimed``."""
    diff = exact - claimed.approx
    if diff.is_zero():
        return True
    return claimed.prec is not None and valuation(place, diff) >= claimed.prec


def _lifts(Q, a, p, prec):
    return [Q.from_int(a + i * p**prec) for i in (0, 1, -1)]


@pytest.mark.parametrize('p,m,n', PRECISION_CASES)
def test_sum_and_product_cosets(Q, p, m, n):
    v = Q.place_above(p)
    for a in range(p**m):
        x = LocalElement(v, Q.from_int(a), m)
        for b in range(p**n):
            y = LocalElement(v, Q.from_int(b), n)
            s, prod = x + y, x * y
            assert s.prec == min(m, n)
            for a1, b1 in zip(_lifts(Q, a, p, m), _lifts(Q, b, p, n)[::-1]):
                assert _in_coset(v, a1 + b1, s), (a, b)
                assert _in_coset(v, a1 * b1, prod), (a, b)


@pytest.mark.parametrize('p', [2, 3, 5])
@pytest.mark.parametrize('prec', [1, 2, 3, 4])
def test_inverse_cosets(Q, p, prec):
    v = Q.place_above(p)
    for a in range(p**prec):
        x = LocalElement(v, Q.from_int(a), prec)
        if a == 0:
            with pytest.raises(InsufficientPrecision):
                x.inverse()
            continue
        k = valuation(v, Q.from_int(a))
        if prec - 2 * k < 1:
            with pytest.raises(InsufficientPrecision):
                x.inverse()
            continue
        inv = x.inverse()
        assert inv.prec == prec - 2 * k
        for a1 in _lifts(Q, a, p, prec) + [Q.from_int(a + 2 * p**prec)]:
            assert _in_coset(v, a1.inverse(), inv), a
