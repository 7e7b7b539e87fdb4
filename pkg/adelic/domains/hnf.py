"""Hermite normal forms of full-rank submodules of Z^2.

A module is stored as ``(a, b, c)`` meaning the lattice spanned by the
columns ``(a, 0)`` and ``(b, c)`` with ``a, c > 0`` and ``0 <= b < a``.
Coordinates are taken in an integral basis ``{1, w}``.
"""
from functools import reduce
from math import gcd

from sympy.core.intfunc import igcdex


def hnf(vectors):
    """Hermite normal form of the lattice spanned by ``vectors``.

    Args:
        vectors (Iterable[tuple[int, int]]): Spanning vectors ``(x, y)``.

    Returns:
        tuple[int, int, int]: ``(a, b, c)``.
    """
    vectors = [(int(x), int(y)) for x, y in vectors]
    c, pivot = 0, (0, 0)
    for x, y in vectors:
        if y == 0:
            continue
        s, t, g = igcdex(c, y)
        pivot = (s * pivot[0] + t * x, s * pivot[1] + t * y)
        c = g
    assert c > 0, 'lattice is not of full rank'
    assert pivot[1] == c
    a = reduce(gcd, (x - (y // c) * pivot[0] for x, y in vectors), 0)
    assert a > 0, 'lattice is not of full rank'
    return a, pivot[0] % a, c


def hnf_basis(h):
    a, b, c = h
    return [(a, 0), (b, c)]


def hnf_contains(h, v):
    a, b, c = h
    x, y = v
    if y % c:
        return False
    return (x - (y // c) * b) % a == 0


def hnf_content(h):
    """Largest integer ``n`` with the module contained in ``n * Z^2``."""
    a, b, c = h
    return gcd(gcd(a, b), c)


def hnf_divide(h, n):
    a, b, c = h
    assert a % n == 0 and b % n == 0 and c % n == 0
    return a // n, b // n, c // n


def hnf_index(h):
    """Index of the module in Z^2."""
    return h[0] * h[2]
