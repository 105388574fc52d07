"""Registry of the checkable identities and a finite-grid verifier.

Each identity quantifies over a few named axes (k, n, i, m, x).  A cell is a
tuple of values for those axes, in the order given by ``Identity.axes``.
Both sides are computed as exact integers; a cell passes iff they are equal.
"""

from dataclasses import dataclass, field
from itertools import product

from .errors import ParameterError, check_nat
from .sieve import M_sieve, power_oracle
from .triangles import default_model


@dataclass(frozen=True)
class Identity:
    id: str
    description: str
    axes: tuple
    _sides: object = field(repr=False, compare=False)
    _domain: object = field(default=None, repr=False, compare=False)

    def out_of_domain(self, cell):
        """Reason the cell is outside the identity's domain, or None."""
        return self._domain(*cell) if self._domain else None


@dataclass(frozen=True)
class GridRange:
    """Inclusive bounds for a verification grid.

    Unset secondary bounds follow the primary ones: ``i_max`` defaults to
    k_max+1 (identities use block k+1), ``m_max`` to n_max and ``x_max`` to
    n_max+1 (the widest staircase row).
    """

    k_max: int = 8
    n_max: int = 8
    m_max: int = None
    x_max: int = None
    i_max: int = None

    def __post_init__(self):
        for name in ("k_max", "n_max", "m_max", "x_max", "i_max"):
            v = getattr(self, name)
            if v is not None:
                check_nat(name, v)

    def axis(self, name):
        bound = {
            "k": self.k_max,
            "n": self.n_max,
            "m": self.n_max if self.m_max is None else self.m_max,
            "x": self.n_max + 1 if self.x_max is None else self.x_max,
            "i": self.k_max + 1 if self.i_max is None else self.i_max,
        }[name]
        return range(bound + 1)


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    cell: tuple  # ((axis, value), ...)
    lhs: int = None
    rhs: int = None
    status: str = "pass"  # "pass", "fail" or "skip"
    note: str = ""

    @property
    def passed(self):
        return self.status == "pass"

    @property
    def failed(self):
        return self.status == "fail"


def _i11_domain(i, m, x, n):
    if m > n:
        return f"I11 needs m <= n (m={m}, n={n})"
    return None


def _i13_domain(i, m, n):
    if m > n:
        return f"I13 needs m <= n (m={m}, n={n})"
    return None


def _registry():
    def i1(model, k, n):
        return M_sieve(k, n), power_oracle(k, n)

    def i2(model, k, n):
        return M_sieve(k, n), model.A(k, n) + model.B_gen(k, n)

    def i3(model, n):
        return model.V_plain(n), model.f(0, n + 1) + model.B(n)

    def i4(model, n):
        return M_sieve(0, n + 1), 2 * M_sieve(0, n)

    def i5(model, k):
        return M_sieve(k + 1, 0), M_sieve(k, 0) + 2 * (k + 2) + 1

    def i6(model, k, n):
        return M_sieve(k + 1, n) - M_sieve(k, n), (n + 2) + model.delta(k + 1, n)

    def i7(model, k, n):
        return M_sieve(k, n + 1) - M_sieve(k, n), M_sieve(k, n) * (k + 1)

    def i8(model, k, n):
        return (model.delta(k + 1, n + 1) - model.delta(k + 1, n),
                model.V_gen(k + 1, n) + model.H_sum(k + 1, n))

    def i9(model, k, n):
        rhs = model.g(k + 1, 0, n + 1, n) + sum(model.delta(i, n) for i in range(k + 2))
        return model.V_gen(k + 1, n), rhs

    def i10(model, k, n):
        return model.V_gen(k + 1, n), M_sieve(k + 1, n) - 1

    def i11(model, i, m, x, n):
        return model.h(i, m + 1, x, n), model.g(i, m, x, n) * i

    def i12(model, k, n):
        return model.H_sum(k + 1, n), ((n + 2) + model.delta(k + 1, n)) * (k + 1)

    def i13(model, i, m, n):
        lhs = sum(model.g(j, m + 1, n - m, n) for j in range(i))
        rhs = sum(model.g(u, m, a, n) * (i - u) for a in range(n - m + 1) for u in range(i))
        return lhs, rhs

    def i14(model, k, n):
        lhs = (n + 3) + model.delta(k + 1, n + 1) + M_sieve(k, n) * (k + 1)
        rhs = (n + 2) + model.delta(k + 1, n) + M_sieve(k + 1, n) * (k + 2)
        return lhs, rhs

    kn = ("k", "n")
    entries = [
        ("I1", "sieve value equals (k+2)^(n+2)", kn, i1, None),
        ("I2", "M(k,n) = A(k,n) + sum of Delta(i,n) for i <= k", kn, i2, None),
        ("I3", "plain diagonal V(n) = f(0,n+1) + B(n)", ("n",), i3, None),
        ("I4", "doubling M(0,n+1) = 2 M(0,n)", ("n",), i4, None),
        ("I5", "base row M(k+1,0) = M(k,0) + 2(k+2) + 1", ("k",), i5, None),
        ("I6", "k-step M(k+1,n) - M(k,n) = (n+2) + Delta(k+1,n)", kn, i6, None),
        ("I7", "n-step M(k,n+1) - M(k,n) = M(k,n)(k+1)", kn, i7, None),
        ("I8", "Delta(k+1,n+1) - Delta(k+1,n) = V(k+1,n) + H(k+1,n)", kn, i8, None),
        ("I9", "V(k+1,n) = g(k+1,0,n+1,n) + sum of Delta(i,n) for i <= k+1", kn, i9, None),
        ("I10", "V(k+1,n) = M(k+1,n) - 1", kn, i10, None),
        ("I11", "h(i,m+1,x,n) = g(i,m,x,n) i", ("i", "m", "x", "n"), i11, _i11_domain),
        ("I12", "H(k+1,n) = ((n+2) + Delta(k+1,n)) (k+1)", kn, i12, None),
        ("I13", "sum_j<i g(j,m+1,n-m,n) = sum_a sum_u<i g(u,m,a,n)(i-u)",
         ("i", "m", "n"), i13, _i13_domain),
        ("I14", "(n+3) + Delta(k+1,n+1) + M(k,n)(k+1) = (n+2) + Delta(k+1,n) + M(k+1,n)(k+2)",
         kn, i14, None),
    ]
    return {e[0]: Identity(*e) for e in entries}


IDENTITIES = _registry()


def _lookup(identity):
    if isinstance(identity, Identity):
        return identity
    try:
        return IDENTITIES[identity]
    except KeyError:
        raise ParameterError(f"unknown identity {identity!r}") from None


def default_grid(identity):
    """Grid used when none is given: k<=50, n<=10 for I1, k, n <= 8 otherwise."""
    if _lookup(identity).id == "I1":
        return GridRange(k_max=50, n_max=10)
    return GridRange(k_max=8, n_max=8)


def verify_identity(identity, cell, model=None):
    """Evaluate one identity at one cell.

    ``cell`` is a tuple ordered like ``identity.axes`` or a mapping from axis
    name to value.  Raises :class:`ParameterError` if the cell lies outside
    the identity's domain.
    """
    ident = _lookup(identity)
    if isinstance(cell, dict):
        missing = set(ident.axes) - set(cell)
        if missing:
            raise ParameterError(f"{ident.id} cell is missing axes {sorted(missing)}")
        cell = tuple(cell[a] for a in ident.axes)
    cell = tuple(cell)
    if len(cell) != len(ident.axes):
        raise ParameterError(f"{ident.id} takes cells over {ident.axes}, got {cell}")
    for name, v in zip(ident.axes, cell):
        check_nat(name, v)
    reason = ident.out_of_domain(cell)
    if reason:
        raise ParameterError(reason)
    lhs, rhs = ident._sides(model or default_model(), *cell)
    return IdentityReport(ident.id, tuple(zip(ident.axes, cell)), lhs, rhs,
                          "pass" if lhs == rhs else "fail")


def verify_grid(identities, grid=None, model=None, fail_fast=False):
    """Check each identity on every cell of ``grid`` in lexicographic order.

    Out-of-domain cells produce "skip" reports.  With ``fail_fast`` the run
    stops after the first failing report.
    """
    reports = []
    for identity in identities:
        ident = _lookup(identity)
        bounds = grid or default_grid(ident)
        for cell in product(*(bounds.axis(a) for a in ident.axes)):
            reason = ident.out_of_domain(cell)
            if reason:
                report = IdentityReport(ident.id, tuple(zip(ident.axes, cell)),
                                        status="skip", note=reason)
            else:
                report = verify_identity(ident, cell, model)
            reports.append(report)
            if fail_fast and report.failed:
                return reports
    return reports
