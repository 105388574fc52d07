"""
Checking the identities on a grid
=================================

Fourteen identities tie the sieve to the triangle model.  Each is checked
exactly on a finite grid; cells outside an identity's domain are skipped.
"""

from collections import Counter

from moessner import IDENTITIES, GridRange, TriangleModel, verify_grid

# %%
for ident in IDENTITIES.values():
    print(f"{ident.id:>4}  over {','.join(ident.axes):<8} {ident.description}")

# %%
reports = verify_grid(list(IDENTITIES), GridRange(k_max=6, n_max=6))
print(Counter((r.identity, r.status) for r in reports))

# %%
# A model with a wrong base row is caught immediately.
class Broken(TriangleModel):
    def f_base(self, x):
        return x + 2


bad = [r for r in verify_grid(["I2"], GridRange(k_max=2, n_max=2), model=Broken()) if r.failed]
print(bad[0])
