"""
Orbifold Euler numbers from commuting permutations
==================================================

For S^n X the orbifold Euler number averages e(X)^#orbits over commuting
pairs (g, h) in S_n.  The answer matches prod (1 - q^m)^(-e(X)).
"""

import time

from hilbert_hecke import euler_series_direct, orbifold_euler_bruteforce

#%%

for e in (1, 2, 3, 4):
    target = euler_series_direct(e, 6)
    t0 = time.perf_counter()
    brute = [orbifold_euler_bruteforce(n, e) for n in range(1, 7)]
    print(f"e = {e}: {brute}  series: {[target[(n, 0)] for n in range(1, 7)]}"
          f"  ({time.perf_counter() - t0:.2f}s)")

#%%
# e = 1 gives the partition numbers: commuting pairs in S_n, up to
# conjugation, are counted by p(n) times n!.
