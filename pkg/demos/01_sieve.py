"""
Running Moessner's sieve
========================

Start from 1, 2, 3, ...; drop every third element and take partial sums,
then drop every second element and take partial sums again.  The cubes
come out.
"""

from moessner import drop_every, moessner_sieve, naturals, partial_sums, take

# %%
# The pipeline spelled out by hand for n = 1.
s = naturals()
s = drop_every(s, 3)
print("drop every 3rd:", take(s, 8))
s = partial_sums(s)
print("partial sums:  ", take(s, 8))
s = partial_sums(drop_every(s, 2))
print("cubes:         ", take(s, 6))

# %%
# moessner_sieve(n) does the same with periods n+2, n+1, ..., 2.
for n in range(5):
    result = moessner_sieve(n)
    print(f"n={n} periods={result.rounds}: {take(result.stream, 6)}")

# %%
# Values stay exact at any size.
big = moessner_sieve(10).stream.at(52)
print(big, big == 52 ** 12)
