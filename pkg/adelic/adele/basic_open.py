from ..utils.errors import InsufficientPrecision, PlaceMismatch, SpecMismatch


class BasicOpenSpec:
    """A basic open set of the finite adeles.

    ``constraints`` maps finitely many finite places to balls
    ``(center, radius)``: the component ``x_v`` must satisfy
    ``val(x_v - center) >= radius``. At every other place the component
    must lie in ``R_v``.
    """

    def __init__(self, field, constraints=None):
        self.field = field
        self.constraints = {}
        for place, (center, radius) in (constraints or {}).items():
            if place.field != field or not place.is_finite:
                raise PlaceMismatch(f'{place} is not a finite place of '
                                    f'{field}')
            self.constraints[place] = (field.zero + center, int(radius))

    @classmethod
    def integral(cls, field):
        """The open subring ``prod R_v``."""
        return cls(field, {})

    def __repr__(self):
        balls = ', '.join(f'{v}: B({c}, {r})'
                          for v, (c, r) in self.constraints.items())
        return f'BasicOpenSpec({self.field.name}, {{{balls}}})'


def _in_ball(component, center, radius):
    diff = component - center
    if diff.approx.is_zero():
        if diff.is_exact or diff.prec >= radius:
            return True
        raise InsufficientPrecision(
            f'component at {component.place} is known to precision '
            f'{diff.prec} < {radius}')
    return diff.valuation() >= radius


def is_in_basic_open(x, U):
    """Membership of a finite adele in a basic open set."""
    if x.field != U.field:
        raise SpecMismatch(f'adele of {x.field} tested against an open set '
                           f'of {U.field}')
    for place, (center, radius) in U.constraints.items():
        if not _in_ball(x.component(place), center, radius):
            return False
    return all(
        component.is_integer()
        for place, component in x.exceptional.items()
        if place not in U.constraints)
