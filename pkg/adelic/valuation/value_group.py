from functools import total_ordering


@total_ordering
class _Infinity:
    """The absorbing top element of the value group ``Z u {inf}``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __add__(self, other):
        if isinstance(other, (int, _Infinity)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return self
        return NotImplemented

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        if isinstance(other, (int, _Infinity)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash('inf')

    def __repr__(self):
        return 'INFINITY'

    def __str__(self):
        return 'inf'

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


def is_infinite(value):
    return value is INFINITY


def value_to_json(value):
    """Encode a value group element: integers as-is, infinity as ``"inf"``."""
    return 'inf' if value is INFINITY else int(value)


def value_min(*values):
    finite = [v for v in values if v is not INFINITY]
    return min(finite) if finite else INFINITY
