"""Binary quadratic forms of negative discriminant.

Ideals of an imaginary quadratic ring are matched with forms: the primitive
ideal ``A Z + (b + w) Z`` corresponds to
``f(x, y) = N(x A - y (b + w)) / A``, whose discriminant is the field
discriminant. Reduction is tracked by an ``SL_2(Z)`` matrix so a generator
can be read back when the form reduces to the principal form.
"""
from math import gcd, isqrt
from typing import NamedTuple

from sympy.core.intfunc import igcdex

from ..domains import IntegralIdeal
from ..domains.hnf import hnf_divide
from ..utils.errors import UnsupportedField

IDENTITY = ((1, 0), (0, 1))
SWAP = ((0, -1), (1, 0))


def _matmul(m, n):
    return ((m[0][0] * n[0][0] + m[0][1] * n[1][0],
             m[0][0] * n[0][1] + m[0][1] * n[1][1]),
            (m[1][0] * n[0][0] + m[1][1] * n[1][0],
             m[1][0] * n[0][1] + m[1][1] * n[1][1]))


def _solve_linmod(a, b, m):
    # a*x = b (mod m); solutions are u + v*n
    d, _, g = igcdex(a, m)
    if b % g:
        raise ValueError(f'{a}*x = {b} has no solution mod {m}')
    return (b // g) * d % m, m // g


class BinaryQF(NamedTuple):
    """The form ``a x^2 + b x y + c y^2``."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self):
        return self.b * self.b - 4 * self.a * self.c

    def normalize(self):
        a, b, c = self
        r = (a - b) // (2 * a)
        return BinaryQF(a, b + 2 * r * a, a * r * r + b * r + c), \
            ((1, r), (0, 1))

    def is_reduced(self):
        a, b, c = self
        return abs(b) <= a <= c and (b >= 0 or (abs(b) != a and a != c))

    def reduce_with_transform(self):
        """Reduced form ``g`` with ``g(X, Y) = f(M (X, Y))``.

        Returns:
            tuple[BinaryQF, tuple]: ``g`` and the matrix ``M``.
        """
        assert self.a > 0 and self.discriminant < 0, \
            'only positive definite forms are reduced here'
        form, M = self.normalize()
        while form.a > form.c or (form.a == form.c and form.b < 0):
            a, b, c = form
            form, step = BinaryQF(c, -b, a).normalize()
            M = _matmul(_matmul(M, SWAP), step)
        return form, M

    def reduced(self):
        return self.reduce_with_transform()[0]

    def inverse(self):
        return BinaryQF(self.a, -self.b, self.c).reduced()

    def __mul__(self, other):
        return compose(self, other)

    def __call__(self, x, y):
        return self.a * x * x + self.b * x * y + self.c * y * y

    def __str__(self):
        return f'({self.a},{self.b},{self.c})'


def compose(f1, f2):
    """Gaussian composition of two primitive forms of the same
    discriminant, reduced."""
    assert f1.discriminant == f2.discriminant, 'discriminants differ'
    a, b, c = f1
    alpha, beta, _ = f2
    g = (b + beta) // 2
    h = -(b - beta) // 2
    j = gcd(a, alpha, g)
    s, t, u = a // j, alpha // j, g // j
    mu, nu = _solve_linmod(t * u, h * u + s * c, s * t)
    lam = _solve_linmod(t * nu, h - t * mu, s)[0]
    k = mu + nu * lam
    l = (k * t - h) // s
    m = (t * u * k - h * u - c * s) // (s * t)
    return BinaryQF(s * t, j * u - (k * t + l * s), k * l - j * m).reduced()


def principal_form(D):
    delta = D % 2
    return BinaryQF(1, delta, (delta - D) // 4)


def reduced_forms(D):
    """All reduced forms of the negative fundamental discriminant ``D``,
    ordered by ``(a, |b|, -b)``."""
    forms = []
    for a in range(1, isqrt(-D // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b - D) % 2 or (b * b - D) % (4 * a):
                continue
            c = (b * b - D) // (4 * a)
            form = BinaryQF(a, b, c)
            if form.is_reduced():
                forms.append(form)
    return sorted(forms, key=lambda f: (f.a, abs(f.b), -f.b))


def _check_imaginary(field):
    if field.family != 'quadratic' or not field.is_imaginary:
        raise UnsupportedField(
            f'form reduction needs an imaginary quadratic field, not {field}')


def form_of_ideal(J):
    """Form of the primitive part of a nonzero integral ideal."""
    field = J.field
    _check_imaginary(field)
    A, b, _ = hnf_divide(J.data, J.data[2])
    C = field.ring_norm((b, 1)) // A
    return BinaryQF(A, -(2 * b + field.trace_w), C)


def ideal_of_form(field, form):
    """Primitive integral ideal ``a Z + ((-b + sqrt D) / 2) Z``."""
    _check_imaginary(field)
    assert form.discriminant == field.disc, 'discriminant mismatch'
    b = (-form.b - field.trace_w) // 2
    J = IntegralIdeal(field, (form.a, b % form.a, 1))
    assert field.ideal_is_closed(J)
    return J


def ideal_generator(I):
    """A generator of a fractional ideal of an imaginary quadratic field,
    or ``None``."""
    field = I.field
    _check_imaginary(field)
    I = I.canonical()
    content = I.J.data[2]
    form = form_of_ideal(I.J)
    reduced, M = form.reduce_with_transform()
    if reduced != principal_form(field.disc):
        return None
    b = hnf_divide(I.J.data, I.J.data[2])[1]
    p, r = M[0][0], M[1][0]
    gamma = (p * form.a - r * b, -r)
    assert field.ring_norm(gamma) == form.a
    generator = field.element((content * gamma[0], content * gamma[1]))
    return generator / field.ring_element(I.a)
