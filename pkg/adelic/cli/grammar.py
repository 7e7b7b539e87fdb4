"""Parsers for the textual forms used on the command line.

::

    field    ::= "Q" | "Q(sqrt" INT ")" | "Fq(t;q=" INT ")"
    element  ::= arithmetic in INT, "+", "-", "*", "/", "^", "(", ")" and
                 the symbols "w" (quadratic), "t" and "g" (Fq(t))
    place    ::= PRIME | "[" PRIME ("," element)? "]" | polynomial | "inf"
    local    ::= element ("prec" INT)?
    adele    ::= "{" (entry ("," entry)* ";")? "tail" element
                 (";" "inf" coords)? "}"
    entry    ::= place ":" local
    ideal    ::= factor ("*" factor)*
    factor   ::= ("(" element ")" | "[" place "]" | PRIME) ("^" INT)?

Every value the command line prints parses back to an equal value.
"""
import ast
import re

from sympy import factorint

from ..adele import Adele, FiniteAdele
from ..classgroup import FractionalIdeal
from ..domains import build_field
from ..local import LocalElement
from ..utils.errors import ParseError

_FIELD_PATTERNS = [
    (re.compile(r'^Q$'), lambda m: dict(type='Rationals')),
    (re.compile(r'^Q\(\s*sqrt\s*\(?\s*(-?\d+)\s*\)?\s*\)$'),
     lambda m: dict(type='QuadraticField', d=int(m.group(1)))),
    (re.compile(r'^F_?q\(\s*t\s*;\s*q\s*=\s*(\d+)\s*\)$'), None),
]
_PREC = re.compile(r'^(.*?)\s+prec\s+(-?\d+)$', re.S)
_POWER = re.compile(r'^(.*?)\s*\^\s*(-?\d+)$', re.S)
_TAIL = re.compile(r'^tail\b')
_OPENING, _CLOSING = '([{', ')]}'
# bound on exponent literals
MAX_EXPONENT = 10000


def field_config(text):
    """Translate a field string into a field config dict."""
    text = text.strip()
    for pattern, make in _FIELD_PATTERNS:
        m = pattern.match(text)
        if m is None:
            continue
        if make is not None:
            return make(m)
        factors = factorint(int(m.group(1)))
        if len(factors) != 1:
            raise ParseError(f'q = {m.group(1)} is not a prime power')
        (p, e), = factors.items()
        return dict(type='FunctionField', p=int(p), e=int(e))
    raise ParseError(f'unknown field {text!r}; expected Q, Q(sqrt d) or '
                     f'Fq(t;q=N)')


def parse_field(text, **kwargs):
    cfg = field_config(text)
    if cfg['type'] == 'FunctionField':
        cfg.update(kwargs)
    return build_field(cfg)


def split_top_level(text, sep):
    """Split on ``sep`` outside brackets and parentheses."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in _OPENING:
            depth += 1
        elif ch in _CLOSING:
            depth -= 1
            if depth < 0:
                raise ParseError(f'unbalanced {ch!r} in {text!r}')
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth:
        raise ParseError(f'unbalanced brackets in {text!r}')
    parts.append(text[start:])
    return [p.strip() for p in parts]


def _symbols(field):
    if field.family == 'quadratic':
        return {'w': field.w}
    if field.family == 'function_field':
        symbols = {'t': field.t}
        if field.Fq.e > 1:
            symbols['g'] = field.g
        return symbols
    return {}


def _eval(node, field, symbols):
    if isinstance(node, ast.Expression):
        return _eval(node.body, field, symbols)
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return field.from_int(node.value)
    if isinstance(node, ast.Name) and node.id in symbols:
        return symbols[node.id]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op,
                                                    (ast.UAdd, ast.USub)):
        value = _eval(node.operand, field, symbols)
        return -value if isinstance(node.op, ast.USub) else value
    if isinstance(node, ast.BinOp):
        left = _eval(node.left, field, symbols)
        if isinstance(node.op, ast.Pow):
            return left**_exponent(node.right)
        right = _eval(node.right, field, symbols)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            return left / right
    raise ParseError(f'unsupported syntax {ast.dump(node)} for {field}')


def _check_exponent(n):
    if abs(n) > MAX_EXPONENT:
        raise ParseError(f'exponent {n} exceeds {MAX_EXPONENT}')
    return n


def _exponent(node):
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return _check_exponent(node.value)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_exponent(node.operand)
    raise ParseError('exponents must be integer literals')


def parse_element(field, text):
    """Parse an element of ``field``."""
    source = text.strip().replace('^', '**')
    if not source:
        raise ParseError('empty element')
    try:
        tree = ast.parse(source, mode='eval')
    except SyntaxError as e:
        raise ParseError(f'cannot parse element {text!r}') from e
    return _eval(tree, field, _symbols(field))


def _parse_int(text, what):
    try:
        return int(text.strip())
    except ValueError as e:
        raise ParseError(f'{what} {text!r} is not an integer') from e


def parse_place(field, text):
    """Parse a place; ``inf`` is the place at infinity of Fq(t)."""
    text = text.strip()
    if field.family == 'function_field':
        if text == 'inf':
            return field.infinity
        x = parse_element(field, text)
        if not field.is_one_denominator(x.den):
            raise ParseError(f'place {text!r} is not a polynomial')
        return field.primes_above(x.num)[0]
    if text.startswith('[') and text.endswith(']'):
        parts = split_top_level(text[1:-1], ',')
        p = _parse_int(parts[0], 'prime')
        places = field.primes_above(p)
        if len(parts) == 1:
            return field.place_above(p)
        if len(parts) != 2:
            raise ParseError(f'malformed place {text!r}')
        r = parse_element(field, parts[1])
        for place in places:
            if field.ideal_contains(field.place_ideal(place), r.num):
                return place
        raise ParseError(f'{parts[1]} lies in no place over {p}')
    return field.place_above(_parse_int(text, 'prime'))


def parse_local(place, text, default_prec=None):
    m = _PREC.match(text.strip())
    if m is None:
        value, prec = text, default_prec
    else:
        value, prec = m.group(1), _parse_int(m.group(2), 'precision')
    return LocalElement(place, parse_element(place.field, value), prec)


def _parse_coordinates(field, text, default_prec=None):
    coords = split_top_level(text, ',')
    if field.family == 'function_field':
        return [parse_local(field.infinity, c, default_prec) for c in coords]
    values = []
    for c in coords:
        try:
            values.append(complex(c.replace(' ', '')) if 'j' in c else
                          float(c))
        except ValueError as e:
            raise ParseError(f'bad archimedean coordinate {c!r}') from e
    return values


def parse_adele(field, text, default_prec=None):
    """Parse an adele literal.

    Returns:
        FiniteAdele | Adele: A full adele when an ``inf`` part is given.
    """
    text = text.strip()
    if not (text.startswith('{') and text.endswith('}')):
        raise ParseError(f'adele literals are enclosed in braces: {text!r}')
    exceptional, tail, infinite = {}, None, None
    for segment in split_top_level(text[1:-1], ';'):
        if _TAIL.match(segment):
            tail = parse_element(field, segment[len('tail'):])
        elif segment.startswith('inf ') or segment == 'inf':
            infinite = _parse_coordinates(field, segment[len('inf'):],
                                          default_prec)
        elif segment:
            for entry in split_top_level(segment, ','):
                key, sep, value = entry.rpartition(':')
                if not sep:
                    raise ParseError(f'entry {entry!r} needs "place: value"')
                place = parse_place(field, key)
                if place in exceptional:
                    raise ParseError(f'place {place} given twice')
                exceptional[place] = parse_local(place, value, default_prec)
    if tail is None:
        raise ParseError(f'adele literal {text!r} has no tail')
    finite = FiniteAdele(field, exceptional, tail)
    if infinite is None:
        return finite
    return Adele(finite, infinite)


def parse_ideal(field, text):
    """Parse a product of principal ideals, places and primes."""
    result = FractionalIdeal.unit(field)
    for factor in split_top_level(text.strip(), '*'):
        m = _POWER.match(factor)
        if m is None:
            base, n = factor, 1
        else:
            base, n = m.group(1), _check_exponent(int(m.group(2)))
        if base.startswith('(') and base.endswith(')'):
            ideal = FractionalIdeal.principal(parse_element(field, base))
        else:
            place = parse_place(field, base)
            field.check_place(place)
            ideal = FractionalIdeal.from_exponents(field, {place: 1})
        result = result * ideal**n
    return result
