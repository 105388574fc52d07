"""Recursive number triangles behind the sieve.

``f(m, x)`` is the plain Pascal-like array: row 0 is x+1 and each further row
is the running sum of the one above.  ``g(i, m, x, n)`` generalizes it to the
i-th block of a sieve with parameter n: the base row is shifted by i*(n+2),
and every deeper row also picks up the full previous row of all earlier
blocks.  Block 0 coincides with ``f``.

Staircases ("triangles") are summed over rows m = 0..top where row m holds
x = 0..top-m, so row 0 has top+1 entries.

All values are memoized per :class:`TriangleModel` instance.  The module-level
functions delegate to one shared instance.
"""

from dataclasses import dataclass

from .errors import ParameterError, check_nat


@dataclass(frozen=True)
class TriangleSum:
    kind: str  # "B", "Delta" or "H"
    params: dict
    rows: tuple  # tuple of row tuples, top row first
    total: int

    @property
    def row_sums(self):
        return tuple(sum(r) for r in self.rows)


@dataclass(frozen=True)
class ABDecomposition:
    k: int
    n: int
    A: int
    B: int
    deltas: tuple

    @property
    def total(self):
        return self.A + self.B


def _staircase(top, entry):
    return tuple(tuple(entry(m, x) for x in range(top - m + 1)) for m in range(top + 1))


class TriangleModel:
    """Memoized evaluator for f, g, h and the sums built from them.

    Subclasses may override :meth:`f_base` or :meth:`cross_block` to perturb
    the definitions; the caches are per instance, so perturbed and reference
    models never share values.
    """

    def __init__(self):
        self._f = {}
        self._g = {}
        self._cross = {}

    def f_base(self, x):
        return x + 1

    def f(self, m, x):
        key = (m, x)
        try:
            return self._f[key]
        except KeyError:
            pass
        check_nat("m", m)
        check_nat("x", x)
        if m == 0:
            value = self.f_base(x)
        else:
            value = sum(self.f(m - 1, a) for a in range(x + 1))
        self._f[key] = value
        return value

    def g(self, i, m, x, n):
        key = (i, m, x, n)
        try:
            return self._g[key]
        except KeyError:
            pass
        for name, v in zip("imxn", key):
            check_nat(name, v)
        if m == 0:
            value = i * (n + 2) + self.f_base(x)
        else:
            if m > n + 1:
                raise ParameterError(
                    f"g(i={i}, m={m}, x={x}, n={n}) needs m <= n+1: the earlier-block "
                    f"row sum runs to n-(m-1) = {n - m + 1} < 0"
                )
            value = sum(self.g(i, m - 1, a, n) for a in range(x + 1))
            value += self.cross_block(i, m - 1, n)
        self._g[key] = value
        return value

    def cross_block(self, i, m, n):
        """Sum of row m (x = 0..n-m) over all blocks j < i."""
        if i == 0:
            return 0
        key = (i, m, n)
        try:
            return self._cross[key]
        except KeyError:
            pass
        j = i - 1
        value = self.cross_block(j, m, n) + sum(self.g(j, m, a, n) for a in range(n - m + 1))
        self._cross[key] = value
        return value

    def h(self, i, m, x, n):
        """Growth of g(i, m, x, .) when n increases by one."""
        return self.g(i, m, x, n + 1) - self.g(i, m, x, n)

    @staticmethod
    def A(k, n):
        check_nat("k", k)
        check_nat("n", n)
        return (k + 1) * (n + 2) + 1

    def f_triangle(self, n):
        check_nat("n", n)
        rows = _staircase(n, self.f)
        return TriangleSum("B", {"n": n}, rows, sum(map(sum, rows)))

    def delta_triangle(self, i, n):
        check_nat("i", i)
        check_nat("n", n)
        rows = _staircase(n, lambda m, x: self.g(i, m, x, n))
        return TriangleSum("Delta", {"i": i, "n": n}, rows, sum(map(sum, rows)))

    def h_triangle(self, i, n):
        check_nat("n", n)
        if check_nat("i", i) < 1:
            raise ParameterError("H is only formed for block index i >= 1")
        rows = _staircase(n + 1, lambda m, x: self.h(i, m, x, n))
        return TriangleSum("H", {"i": i, "n": n}, rows, sum(map(sum, rows)))

    def B(self, n):
        return self.f_triangle(n).total

    def delta(self, i, n):
        return self.delta_triangle(i, n).total

    def B_gen(self, k, n):
        check_nat("k", k)
        return sum(self.delta(i, n) for i in range(k + 1))

    def decompose(self, k, n):
        """Split M(k, n) into the surviving element A and the triangle sums."""
        deltas = tuple(self.delta(i, n) for i in range(check_nat("k", k) + 1))
        return ABDecomposition(k, n, self.A(k, n), sum(deltas), deltas)

    def V_plain(self, n):
        check_nat("n", n)
        return sum(self.f(a, n + 1 - a) for a in range(n + 2))

    def V_gen(self, i, n):
        check_nat("n", n)
        if check_nat("i", i) < 1:
            raise ParameterError("V is only formed for block index i >= 1")
        return sum(self.g(i, a, n + 1 - a, n) for a in range(n + 2))

    def H_sum(self, i, n):
        return self.h_triangle(i, n).total


_model = TriangleModel()

f = _model.f
g = _model.g
h = _model.h
A = TriangleModel.A
B = _model.B
delta = _model.delta
B_gen = _model.B_gen
V_plain = _model.V_plain
V_gen = _model.V_gen
H_sum = _model.H_sum
decompose = _model.decompose


def default_model():
    return _model
