import mmcv

from ..adele import Adele
from ..local import LocalElement

SCHEMA = 'adelic/1'


def local_to_json(x):
    return dict(value=str(x.approx), prec=x.prec)


def coordinate_to_json(c):
    if isinstance(c, LocalElement):
        return local_to_json(c)
    if isinstance(c, complex):
        return [c.real, c.imag]
    return c


def adele_to_json(x):
    """JSON form of a finite or full adele, mirroring the literal syntax
    with exact values as strings."""
    finite = x.finite if isinstance(x, Adele) else x
    result = dict(
        exceptional=[
            dict(place=str(v), **local_to_json(c))
            for v, c in finite.exceptional.items()
        ],
        tail=str(finite.tail))
    if isinstance(x, Adele):
        result['inf'] = [coordinate_to_json(c) for c in x.infinite]
    return result


def exponents_to_json(exponents):
    return [dict(place=str(v), exp=n) for v, n in exponents.items()]


def format_factorization(field, exponents):
    """Product of place powers that parses back as an ideal literal."""
    if not exponents:
        return '(1)'
    factors = []
    for v, n in exponents.items():
        base = f'({v})' if field.family == 'function_field' else str(v)
        factors.append(base if n == 1 else f'{base}^{n}')
    return '*'.join(factors)


def format_class_group(group):
    lines = [
        f'discriminant: {group.discriminant}', f'order: {group.order}',
        'forms: ' + ', '.join(str(f) for f in group.forms), 'table:'
    ]
    lines.extend('  ' + ' '.join(str(k) for k in row) for row in group.table)
    return '\n'.join(lines)


def make_report(command, field, payload):
    report = dict(schema=SCHEMA, command=command, field=field.name)
    report.update(payload)
    return report


def dump_report(report):
    """Serialize a report as one JSON document with sorted keys."""
    return mmcv.dump(report, file_format='json', sort_keys=True)
