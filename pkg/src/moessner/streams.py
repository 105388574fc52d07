"""Lazy, unbounded streams of naturals and the two combinators the sieve uses.

Positions are 1-indexed throughout the public surface: ``s.at(1)`` is the
first element.  Streams never end, so every consumer must bound its demand;
:func:`take` is the terminating consumer.
"""

import threading
from itertools import count, islice

from .errors import ParameterError, check_nat


class LazyStream:
    """A re-iterable stream backed by a single demand-driven generator.

    Elements are produced on first request and remembered, so repeated
    prefixes are identical and cost nothing extra.  The buffer is guarded
    by a lock; separate iterators over the same stream see the same values.
    """

    def __init__(self, factory):
        self._factory = factory
        self._source = None
        self._buffer = []
        self._lock = threading.Lock()

    def _force(self, length):
        with self._lock:
            if self._source is None:
                self._source = iter(self._factory())
            missing = length - len(self._buffer)
            if missing > 0:
                self._buffer.extend(islice(self._source, missing))
            return len(self._buffer) >= length

    @property
    def forced(self):
        """Number of elements computed so far."""
        return len(self._buffer)

    def at(self, position):
        """Element at 1-indexed ``position``."""
        check_nat("position", position)
        if position < 1:
            raise ParameterError("stream positions start at 1")
        self._force(position)
        return self._buffer[position - 1]

    def __iter__(self):
        i = 0
        while True:
            self._force(i + 1)
            yield self._buffer[i]
            i += 1

    def __repr__(self):
        shown = ", ".join(map(str, self._buffer[:5]))
        return f"LazyStream([{shown}{', ...' if shown else '...'}])"


def naturals():
    """The stream 1, 2, 3, ..."""
    return LazyStream(lambda: count(1))


def drop_every(s, x):
    """Remove the elements of ``s`` at positions divisible by ``x``."""
    check_nat("x", x)
    if x < 2:
        raise ParameterError(f"drop period x must be >= 2, got {x}")

    def gen():
        for p, v in enumerate(s, 1):
            if p % x:
                yield v

    return LazyStream(gen)


def partial_sums(s):
    """Stream whose p-th element is the sum of the first p elements of ``s``."""

    def gen():
        total = 0
        for v in s:
            total += v
            yield total

    return LazyStream(gen)


def take(s, count):
    """First ``count`` elements of ``s`` as a list."""
    check_nat("count", count)
    return list(islice(s, count))
