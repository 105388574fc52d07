"""Moessner's sieve, its triangle decomposition, and an identity checker.

The sieve turns the positive integers into the stream of (n+2)-th powers by
alternating "drop every x-th element" with partial summation.  The triangle
model reconstructs every sieved value as a surviving original element plus
staircase sums of recursively defined numbers, and the verifier checks the
resulting identities exactly on finite grids.
"""

from .errors import ParameterError
from .streams import LazyStream, naturals, drop_every, partial_sums, take
from .sieve import SieveResult, moessner_sieve, M_sieve, power_oracle
from .triangles import (
    TriangleModel,
    TriangleSum,
    ABDecomposition,
    f,
    g,
    h,
    A,
    B,
    delta,
    B_gen,
    V_plain,
    V_gen,
    H_sum,
    decompose,
)
from .identities import (
    IDENTITIES,
    Identity,
    GridRange,
    IdentityReport,
    verify_identity,
    verify_grid,
    default_grid,
)

__all__ = [
    "ParameterError",
    "LazyStream", "naturals", "drop_every", "partial_sums", "take",
    "SieveResult", "moessner_sieve", "M_sieve", "power_oracle",
    "TriangleModel", "TriangleSum", "ABDecomposition",
    "f", "g", "h", "A", "B", "delta", "B_gen", "V_plain", "V_gen", "H_sum",
    "decompose",
    "IDENTITIES", "Identity", "GridRange", "IdentityReport",
    "verify_identity", "verify_grid", "default_grid",
]
