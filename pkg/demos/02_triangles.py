"""
Where the powers come from
==========================

Every sieved value M(k, n) is a surviving original element A plus what the
partial sums pile onto it, which is organized as k+1 staircases Delta(i, n).
"""

from moessner import M_sieve, TriangleModel

model = TriangleModel()

# %%
# The plain triangle for n = 3: row m holds f(m, 0..3-m).
for row in model.f_triangle(3).rows:
    print(row)

# %%
# Block i = 1 of the generalized triangle for n = 1.
tri = model.delta_triangle(1, 1)
print(tri.rows, tri.row_sums, tri.total)

# %%
# Reassemble M(k, n) from the pieces.
for k, n in [(0, 0), (1, 1), (3, 2)]:
    d = model.decompose(k, n)
    print(f"M({k},{n}) = {M_sieve(k, n)} = A {d.A} + deltas {list(d.deltas)}")

# %%
# Raising n by one grows each g-value; the growth of row m+1 is exactly
# i times row m.
i, n = 2, 3
for m in range(3):
    print([model.h(i, m + 1, x, n) for x in range(4)],
          [model.g(i, m, x, n) * i for x in range(4)])
