"""
Characters of affine ADE algebras, two ways
===========================================

Weight multiplicities of an integrable highest-weight module from
Freudenthal's recursion and from the Weyl-Kac formula.
"""

import time

from hilbert_hecke import build_algebra, character_q_series, freudenthal_multiplicities, level, weyl_kac_character

#%%
# Cartan matrix and marks (the positive kernel vector) for D4.

d4 = build_algebra("D4")
print(d4.cartan)
print("marks", d4.marks)

#%%
# Basic representation of A1: the string Lambda_0 - m delta has
# multiplicity p(m).

a1 = build_algebra("A1")
table = freudenthal_multiplicities(a1, (1, 0), 6)
print([table[(m, m)] for m in range(7)])
print(character_q_series(table))

#%%
# Both algorithms on the D4 basic representation.

w = (1, 0, 0, 0, 0)
print("level", level(d4, w))
t0 = time.perf_counter()
f = freudenthal_multiplicities(d4, w, 4)
t1 = time.perf_counter()
k = weyl_kac_character(d4, w, 4)
t2 = time.perf_counter()
print(f"{len(f)} weights; freudenthal {t1 - t0:.2f}s, weyl-kac {t2 - t1:.2f}s, equal: {f == k}")
