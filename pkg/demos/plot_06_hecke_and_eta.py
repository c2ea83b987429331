"""
Hecke operators and the eta function
====================================

Delta is an eigenform of every T(p); Eisenstein series have eigenvalue
1 + p^(k-1).  The eta function transforms under tau -> -1/tau.
"""

from hilbert_hecke import delta, eisenstein, eta_modularity_check, hecke_T, is_eigenform

#%%

D = delta(100)
print([int(D[n]) for n in range(1, 13)])
for p in (2, 3, 5, 7):
    print(p, is_eigenform(D, p))

#%%

for k in (4, 6, 8, 10, 14):
    E = eisenstein(k, 40)
    print(k, is_eigenform(E, 3), 1 + 3 ** (k - 1))

#%%
# T(2) applied to a non-eigenform in weight 12.

f = eisenstein(4, 40) ** 3
print([str(c) for c in hecke_T(2, f).coeffs[:5]])

#%%

report = eta_modularity_check([1j, 0.3 + 1.1j, -0.4 + 0.7j, 2.0 + 0.5j], 1e-8)
for tau, dev, terms in zip(report.taus, report.deviations, report.terms):
    print(tau, f"{dev:.2e}", terms)
