def primes_above(field, p):
    """Finite places of ``field`` over the base prime ``p``.

    ``p`` is a rational prime, or a monic irreducible polynomial for
    Fq(t). The places come in canonical order and satisfy
    ``sum(e * f) == field.degree``.
    """
    return field.primes_above(p)


def places_up_to(field, bound):
    """Enumerate the maximal spectrum lazily up to ``bound``."""
    return field.places_up_to(bound)


def embeddings(field):
    return field.embeddings()


def ideal_mul(I, J):
    return I * J


def ideal_of(field, *gens):
    """Ideal generated by elements of the ring of integers.

    Accepts ring elements or integral :class:`FieldElement` instances.
    """
    ring_gens = []
    for g in gens:
        if hasattr(g, 'num'):
            assert g.is_integral(), f'{g} is not integral'
            g = g.num
        elif isinstance(g, int) and field.family != 'rationals':
            g = field.from_int(g).num
        ring_gens.append(g)
    return field.ideal_from_generators(ring_gens)


def factor_ideal(I):
    """Factorization of a nonzero integral ideal into places."""
    return I.field.factor_ideal(I)


def multiply_out(field, exponents):
    """``prod v**n_v`` as an integral ideal for nonnegative exponents."""
    return field.ideal_from_exponents(exponents)


__all__ = [
    'primes_above', 'places_up_to', 'embeddings',
    'ideal_mul', 'ideal_of', 'factor_ideal', 'multiply_out'
]
