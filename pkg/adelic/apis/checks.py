"""Randomized consistency checks of the arithmetic, one class per
property. Every check is built from a config dict through ``CHECKS`` and
called with a field and a seeded ``random.Random``."""
from typing import NamedTuple

from mmcv.utils import Registry, build_from_cfg

from ..adele import (FiniteAdele, adele_eq, from_localization_form,
                     to_localization_form)
from ..classgroup import (FractionalIdeal, IdeleClass, class_group,
                          ideal_class_of, ideal_class_section,
                          idele_class_to_ideal_class, is_in_kernel_subgroup,
                          principal_class)
from ..domains import ExponentVector
from ..idele import (inj_units_K, inj_units_K_full, is_in_kernel,
                     map_to_fractional_ideals, preimage_idele)
from ..local import LocalElement
from ..valuation import INFINITY, int_valuation, uniformizer, valuation

CHECKS = Registry('check')


def build_check(cfg, default_args=None):
    return build_from_cfg(cfg, CHECKS, default_args)


def default_bound(field):
    """Prime bound (number fields) or degree bound (Fq(t)) of the sampled
    places."""
    return 2 if field.family == 'function_field' else 20


class CheckResult(NamedTuple):
    name: str
    passed: bool
    samples: int
    detail: str = ''


def random_exponents(field, places, rng, size=3, span=2):
    chosen = rng.sample(places, min(size, len(places)))
    return {v: rng.randint(-span, span) for v in chosen}


def random_ideal(field, places, rng):
    return FractionalIdeal.from_exponents(
        field, random_exponents(field, places, rng))


def random_finite_adele(field, places, rng, prec=None):
    """An adele with random components at a few places and a random tail;
    ``prec`` makes the components approximate."""
    exceptional = {}
    for v in rng.sample(places, min(2, len(places))):
        approx = field.random_element(rng, nonzero=True)
        exceptional[v] = LocalElement(
            v, approx, None if prec is None else
            max(valuation(v, approx), 0) + prec)
    return FiniteAdele(field, exceptional,
                       field.random_element(rng, nonzero=True))


def random_idele(field, places, rng):
    k = field.random_element(rng, nonzero=True)
    return preimage_idele(random_ideal(field, places, rng)) * inj_units_K(k)


class BaseCheck:
    """A named property checked on ``samples`` random inputs over the
    finite places above primes up to ``bound``."""

    def __init__(self, samples=100, bound=None):
        self.samples = samples
        self.bound = bound

    @property
    def name(self):
        return type(self).__name__

    def places(self, field):
        return field.places_up_to(self.bound or default_bound(field))

    def __call__(self, field, rng):
        failures = []
        places = self.places(field)
        for i in range(self.samples):
            problem = self.sample(field, places, rng)
            if problem:
                failures.append(f'sample {i}: {problem}')
        return CheckResult(self.name, not failures, self.samples,
                           '; '.join(failures[:3]))

    def sample(self, field, places, rng):
        """Check one random input and return a description of the failure,
        if any."""
        raise NotImplementedError


@CHECKS.register_module()
class ValuationAxioms(BaseCheck):

    def sample(self, field, places, rng):
        x = field.random_element(rng, nonzero=True)
        y = field.random_element(rng, nonzero=True)
        for v in places:
            vx, vy = valuation(v, x), valuation(v, y)
            if valuation(v, x * y) != vx + vy:
                return f'val({x}*{y}) at {v}'
            vs = valuation(v, x + y)
            if vs is not INFINITY and vs < min(vx, vy):
                return f'ultrametric inequality for {x}, {y} at {v}'
            if vx != vy and vs != min(vx, vy):
                return f'strict ultrametric equality for {x}, {y} at {v}'
        return None


@CHECKS.register_module()
class RepresentativeIndependence(BaseCheck):

    def sample(self, field, places, rng):
        r = field.random_ring_element(rng, nonzero=True)
        s = field.random_ring_element(rng, nonzero=True)
        c = field.random_ring_element(rng, nonzero=True)
        rc = (field.ring_element(r) * field.ring_element(c)).num
        sc = (field.ring_element(s) * field.ring_element(c)).num
        for v in places:
            if (int_valuation(v, r) - int_valuation(v, s) !=
                    int_valuation(v, rc) - int_valuation(v, sc)):
                return f'{r}/{s} scaled by {c} at {v}'
        return None


@CHECKS.register_module()
class Uniformizers(BaseCheck):

    def __init__(self, bound=None):
        super().__init__(samples=1, bound=bound)

    def sample(self, field, places, rng):
        extra = [v for v in field.infinite_places() if not v.is_archimedean]
        for v in places + extra:
            if valuation(v, uniformizer(v)) != 1:
                return f'uniformizer at {v}'
        return None


@CHECKS.register_module()
class FactorizationRoundTrip(BaseCheck):

    def sample(self, field, places, rng):
        e = random_exponents(field, places, rng)
        I = FractionalIdeal.from_exponents(field, e)
        if I.exponents != e:
            return f'from_exponents({e})'
        k = field.random_element(rng, nonzero=True)
        if FractionalIdeal.principal(k).exponents != field.support(k):
            return f'factorization of ({k})'
        e1 = {v: abs(n) for v, n in e.items()}
        e2 = {v: abs(n) for v, n in random_exponents(field, places,
                                                     rng).items()}
        product = field.ideal_from_exponents(e1) * field.ideal_from_exponents(
            e2)
        if field.factor_ideal(product) != ExponentVector(
                list(e1.items()) + list(e2.items())):
            return 'ideal product disagrees with exponent sum'
        return None


@CHECKS.register_module()
class LocalizationRoundTrip(BaseCheck):

    def sample(self, field, places, rng):
        x = random_finite_adele(field, places, rng)
        if not adele_eq(from_localization_form(to_localization_form(x)), x):
            return f'round trip of {x}'
        return None


@CHECKS.register_module()
class SurjectivityAndKernel(BaseCheck):

    def sample(self, field, places, rng):
        I = random_ideal(field, places, rng)
        if map_to_fractional_ideals(preimage_idele(I)) != I:
            return f'preimage of {I}'
        x = random_idele(field, places, rng)
        if is_in_kernel(x) != map_to_fractional_ideals(x).is_unit():
            return f'kernel membership of {x}'
        y = random_idele(field, places, rng)
        if map_to_fractional_ideals(x * y) != (
                map_to_fractional_ideals(x) * map_to_fractional_ideals(y)):
            return 'the ideal map is not multiplicative'
        return None


@CHECKS.register_module()
class ClassGroupQuotient(BaseCheck):
    """The idele class group modulo ``I_{K,inf} K*/K*`` against the ideal
    class group: section round trips, well-definedness on cosets and kernel
    exactness."""

    def __call__(self, field, rng):
        if field.family == 'quadratic':
            classes = class_group(field).elements()
        else:
            classes = [principal_class(field)]
        for c in classes:
            if idele_class_to_ideal_class(ideal_class_section(c)) != c:
                return CheckResult(self.name, False, self.samples,
                                   f'section of class {c}')
        return super().__call__(field, rng)

    def sample(self, field, places, rng):
        x = IdeleClass(random_idele(field, places, rng))
        k = field.random_element(rng, nonzero=True)
        shifted = IdeleClass(x.representative * inj_units_K_full(k))
        target = idele_class_to_ideal_class(x)
        if idele_class_to_ideal_class(shifted) != target:
            return f'class map differs on the coset of {x}'
        if target != ideal_class_of(
                map_to_fractional_ideals(x.representative)):
            return f'class map of {x}'
        if is_in_kernel_subgroup(x) != target.is_principal():
            return f'kernel membership of {x}'
        return None
