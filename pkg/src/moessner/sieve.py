"""Moessner's sieve and the closed-form power it is known to produce."""

from dataclasses import dataclass
from functools import lru_cache

from .errors import check_nat
from .streams import LazyStream, drop_every, naturals, partial_sums


@dataclass(frozen=True)
class SieveResult:
    n: int
    stream: LazyStream
    rounds: tuple  # drop periods in the order applied: n+2, n+1, ..., 2


def moessner_sieve(n):
    """Run n+1 drop/sum rounds over the naturals, dropping every (n+2-j)-th
    element in round j.

    >>> from moessner import take
    >>> take(moessner_sieve(1).stream, 5)
    [1, 8, 27, 64, 125]
    """
    check_nat("n", n)
    s = naturals()
    rounds = tuple(range(n + 2, 1, -1))
    for x in rounds:
        s = partial_sums(drop_every(s, x))
    return SieveResult(n, s, rounds)


@lru_cache(maxsize=64)
def _shared_sieve(n):
    return moessner_sieve(n)


def M_sieve(k, n):
    """M(k, n) read off the sieved stream at position k+2."""
    check_nat("k", k)
    return _shared_sieve(check_nat("n", n)).stream.at(k + 2)


def power_oracle(k, n):
    """(k+2)**(n+2) by exact integer exponentiation; shares nothing with the sieve."""
    check_nat("k", k)
    check_nat("n", n)
    return pow(k + 2, n + 2)
