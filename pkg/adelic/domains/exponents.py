from collections.abc import Mapping


class ExponentVector(Mapping):
    """Immutable sparse map from finite places to nonzero integers.

    Zero entries are dropped on construction and iteration follows the
    canonical place order, so two vectors describing the same factorization
    compare (and print) identically.

    Args:
        entries (Mapping | Iterable[tuple], optional): Place/exponent pairs.
    """

    def __init__(self, entries=()):
        if isinstance(entries, Mapping):
            entries = entries.items()
        merged = {}
        for place, exponent in entries:
            merged[place] = merged.get(place, 0) + int(exponent)
        self._entries = dict(
            sorted(((v, n) for v, n in merged.items() if n != 0),
                   key=lambda item: item[0].sort_key()))

    def __getitem__(self, place):
        return self._entries[place]

    def get(self, place, default=0):
        return self._entries.get(place, default)

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if isinstance(other, ExponentVector):
            return self._entries == other._entries
        if isinstance(other, Mapping):
            return self == ExponentVector(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __add__(self, other):
        return ExponentVector(list(self.items()) + list(other.items()))

    def __neg__(self):
        return ExponentVector((v, -n) for v, n in self.items())

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        return ExponentVector((v, k * n) for v, n in self.items())

    __rmul__ = __mul__

    def is_nonnegative(self):
        return all(n >= 0 for n in self.values())

    def positive_part(self):
        return ExponentVector((v, n) for v, n in self.items() if n > 0)

    def negative_part(self):
        return ExponentVector((v, -n) for v, n in self.items() if n < 0)

    def __repr__(self):
        body = ', '.join(f'{v}: {n}' for v, n in self.items())
        return f'ExponentVector({{{body}}})'
