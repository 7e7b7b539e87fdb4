"""Factorization of polynomials over finite fields.

Square-free decomposition, distinct-degree factorization and
Cantor-Zassenhaus equal-degree splitting. The splitting step draws random
polynomials from a seeded :class:`random.Random`, so results (including the
order in which factors are found) are reproducible; the public entry points
sort their output anyway.
"""
import random

from sympy import primefactors

from ..utils import get_root_logger
from .poly import FqPoly, poly_gcd

DEFAULT_FACTOR_SEED = 0


def sqf_list(f):
    """Square-free decomposition of a nonzero polynomial.

    Args:
        f (FqPoly): Nonzero polynomial.

    Returns:
        tuple[int, list[tuple[FqPoly, int]]]: Leading coefficient and the
            square-free monic parts with their multiplicities.
    """
    F = f.field
    lc = f.lc
    f = f.monic()
    if f.degree < 1:
        return lc, []
    n, factors = 1, []
    one = FqPoly(F, (1, ))
    while True:
        sqf = False
        df = f.derivative()
        if df:
            g = poly_gcd(f, df)
            h = f // g
            i = 1
            while h != one:
                G = poly_gcd(g, h)
                H = h // G
                if H.degree > 0:
                    factors.append((H, i * n))
                g, h, i = g // G, G, i + 1
            if g == one:
                sqf = True
            else:
                f = g
        if sqf:
            break
        # f is a p-th power: take the root coefficientwise
        p = F.p
        f = FqPoly(F, [F.pth_root(c) for c in f.coeffs[::p]])
        n *= p
    return lc, factors


def ddf(f):
    """Distinct-degree factorization of a monic square-free polynomial.

    Returns:
        list[tuple[FqPoly, int]]: Pairs ``(g, d)`` where ``g`` is the
            product of all irreducible factors of degree ``d``.
    """
    F = f.field
    x = FqPoly.x(F)
    h = x
    d = 1
    factors = []
    while 2 * d <= f.degree:
        h = h.pow_mod(F.q, f)
        g = poly_gcd(f, h - x)
        if not g.is_one():
            factors.append((g, d))
            f = f // g
            h = h % f
        d += 1
    if f.degree > 0:
        factors.append((f, f.degree))
    return factors


def _random_poly(F, degree, rng):
    return FqPoly(F, [rng.randrange(F.q) for _ in range(degree)])


def edf(f, d, rng):
    """Cantor-Zassenhaus equal-degree splitting.

    Args:
        f (FqPoly): Monic square-free product of irreducibles of degree d.
        d (int): Degree of every irreducible factor of ``f``.
        rng (random.Random): Source of the random splitting polynomials.

    Returns:
        list[FqPoly]: The monic irreducible factors.
    """
    F = f.field
    n = f.degree
    if n <= d:
        return [f]
    factors = [f]
    one = FqPoly(F, (1, ))
    rounds = 0
    while len(factors) < n // d:
        rounds += 1
        r = _random_poly(F, n, rng)
        if r.degree < 1:
            continue
        if F.p == 2:
            # trace from F_{q^d} down to F_2
            g = r % f
            t = g
            for _ in range(F.e * d - 1):
                t = t * t % f
                g = g + t
        else:
            g = r.pow_mod((F.q**d - 1) // 2, f) - one
        split = []
        for u in factors:
            if u.degree > d:
                h = poly_gcd(g, u)
                if 0 < h.degree < u.degree:
                    split.extend([h, u // h])
                    continue
            split.append(u)
        factors = split
    get_root_logger().debug(
        f'split degree {n} polynomial into {len(factors)} factors of '
        f'degree {d} after {rounds} rounds')
    return factors


def factor(f, seed=DEFAULT_FACTOR_SEED):
    """Factor a nonzero polynomial into monic irreducibles.

    Args:
        f (FqPoly): Nonzero polynomial.
        seed (int): Seed of the equal-degree splitting. Defaults to 0.

    Returns:
        tuple[int, list[tuple[FqPoly, int]]]: Leading coefficient and the
            monic irreducible factors with multiplicities, sorted.
    """
    if not f:
        raise ZeroDivisionError('cannot factor the zero polynomial')
    rng = random.Random(seed)
    lc, sqf = sqf_list(f)
    result = {}
    for g, k in sqf:
        for h, d in ddf(g):
            for irreducible in edf(h, d, rng):
                result[irreducible] = result.get(irreducible, 0) + k
    return lc, sorted(result.items(), key=lambda item: item[0].sort_key())


def is_irreducible(f):
    """Rabin's irreducibility test for polynomials of positive degree."""
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    F = f.field
    f = f.monic()
    x = FqPoly.x(F)
    if x.pow_mod(F.q**n, f) != x:
        return False
    for r in primefactors(n):
        h = x.pow_mod(F.q**(n // r), f)
        if not poly_gcd(f, h - x).is_one():
            return False
    return True


def monic_polys(F, degree):
    """All monic polynomials of the given degree in lexicographic order."""
    for index in range(F.q**degree):
        coeffs = []
        for _ in range(degree):
            index, c = divmod(index, F.q)
            coeffs.append(c)
        yield FqPoly(F, coeffs + [1])


def irreducibles(F, degree):
    """All monic irreducible polynomials of the given degree."""
    for f in monic_polys(F, degree):
        if is_irreducible(f):
            yield f
