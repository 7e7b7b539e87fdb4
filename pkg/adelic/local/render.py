from ..valuation import valuation

DEFAULT_TERMS = 6


def _expand(x, terms):
    place = x.place
    field = place.field
    if x.approx.is_zero():
        return [], True
    v = valuation(place, x.approx)
    stop = v + terms if x.is_exact else x.prec
    pi = field.uniformizer(place)
    y = x.approx / pi**v
    out = []
    for i in range(v, stop):
        a = field.residue(place, y)
        if not a.is_zero():
            out.append((i, a))
        y = (y - a) / pi
        if y.is_zero():
            return out, True
    return out, False


def digits(x, terms=DEFAULT_TERMS):
    """Expansion ``sum a_i * pi**i`` of a local element.

    Digits are taken from the residue system of the place (integers
    ``0..p-1``, pairs ``a + b*w`` at inert places, constants of Fq at the
    infinite place of Fq(t)); ``pi`` is the uniformizer of the place.

    Args:
        x (LocalElement): The element.
        terms (int): Number of digits for exact elements. Inexact elements
            stop at their precision.

    Returns:
        list[tuple[int, FieldElement]]: ``(i, a_i)`` for nonzero digits.
    """
    return _expand(x, terms)[0]


def _wrap(s):
    return f'({s})' if any(op in s[1:] for op in '+-/*') else s


def format_expansion(x, terms=DEFAULT_TERMS):
    """Human readable expansion, e.g. ``3 + 2*5 + 4*5^2 + O(5^3)``.

    At the infinite place of Fq(t) the expansion is printed as a Laurent
    polynomial in ``t`` (powers of ``t^-1``).
    """
    place = x.place
    at_infinity = place.kind == 'infinity'
    pi = 't' if at_infinity else _wrap(str(place.field.uniformizer(place)))

    def power(i):
        if at_infinity:
            i = -i
        if i == 0:
            return ''
        return pi if i == 1 else f'{pi}^{i}'

    expansion, terminated = _expand(x, terms)
    parts = []
    for i, a in expansion:
        p = power(i)
        a = str(a)
        if not p:
            parts.append(a)
        elif a == '1':
            parts.append(p)
        else:
            parts.append(f'{_wrap(a)}*{p}')
    if not x.is_exact:
        parts.append(f'O({power(x.prec) or 1})')
    elif not terminated:
        parts.append('...')
    return ' + '.join(parts) if parts else '0'
