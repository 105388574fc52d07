"""Independent reference implementations shared by the tests.

Nothing here imports the package: the sieve is replayed on plain lists and
f/g are the bare recursive definitions without memoization.
"""

from itertools import accumulate

import pytest


def list_sieve(n, length):
    # each drop round keeps at least half, so 2**(n+1) * length inputs suffice
    s = list(range(1, 2 ** (n + 1) * length + n + 4))
    for x in range(n + 2, 1, -1):
        s = list(accumulate(v for p, v in enumerate(s, 1) if p % x))
    return s[:length]


def naive_f(m, x):
    if m == 0:
        return x + 1
    return sum(naive_f(m - 1, a) for a in range(x + 1))


def naive_g(i, m, x, n):
    if m == 0:
        return i * (n + 2) + x + 1
    own = sum(naive_g(i, m - 1, a, n) for a in range(x + 1))
    cross = sum(naive_g(j, m - 1, a, n) for j in range(i) for a in range(n - (m - 1) + 1))
    return own + cross


def staircase_sum(top, entry):
    return sum(entry(m, x) for m in range(top + 1) for x in range(top - m + 1))


@pytest.fixture
def oracle():
    class Oracle:
        sieve = staticmethod(list_sieve)
        f = staticmethod(naive_f)
        g = staticmethod(naive_g)
        staircase = staticmethod(staircase_sum)
    return Oracle


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
