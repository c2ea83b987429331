"""
Betti numbers of Hilbert schemes of points
==========================================

Builds the two-variable generating function for a few surfaces and reads
off Poincare polynomials and Euler numbers.
"""

from hilbert_hecke import SurfaceTopology, euler_series, goettsche_series, poincare_polynomial

#%%
# The projective plane: b = (1, 0, 1, 0, 1).

p2 = SurfaceTopology((1, 0, 1, 0, 1))
series = goettsche_series(p2, 4)
print(series)

#%%
# Each q^n coefficient is the Poincare polynomial of Hilb^n, as a dict
# degree -> Betti number.  The top degree is 4n and the list is symmetric.

for n in range(1, 5):
    p = poincare_polynomial(p2, n)
    print(n, [p.get(d, 0) for d in range(0, 4 * n + 1, 2)])

#%%
# Setting t = -1 gives Euler numbers, here prod (1 - q^m)^(-3).

print([euler_series(p2, 8)[(n, 0)] for n in range(9)])

#%%
# A surface with odd cohomology (an abelian surface, b = (1, 4, 6, 4, 1))
# has Euler number 0, so every Hilb^n has Euler number 0 as well.

torus = SurfaceTopology((1, 4, 6, 4, 1))
print(euler_series(torus, 5))
print(poincare_polynomial(torus, 2))
