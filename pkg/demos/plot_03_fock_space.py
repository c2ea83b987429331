"""
A super Fock space with one oscillator per cohomology class
===========================================================

Creators F and annihilators E, bosonic for even classes and fermionic for
odd ones.  Counting basis states by weight and degree reproduces the
Hilbert scheme generating function.
"""

from hilbert_hecke import ColorSpec, FockVector, SurfaceTopology, check_relations, goettsche_series, graded_character
from hilbert_hecke.fock import VACUUM, annihilate, create

topo = SurfaceTopology((1, 2, 1, 2, 1))
spec = ColorSpec.from_topology(topo)
print([(c.id, c.degree) for c in spec])

#%%
# Two fermionic creators anticommute, and a fermion cannot be created twice.

odd = [c for c in spec if c.parity]
v = FockVector.basis(VACUUM)
print(create(odd[0], 1, create(odd[1], 1, v)))
print(create(odd[1], 1, create(odd[0], 1, v)))
print(create(odd[0], 1, create(odd[0], 1, v)))

#%%
# E_1 F_1 |0> = c_1 |0>, with c_i = i by default.

even = spec[0]
print(annihilate(even, 1, create(even, 1, v)))

#%%
# All three relations on every state of weight <= 4.

report = check_relations(spec, 4, 3)
print(report.checked, "instances,", len(report.failures), "failures")

#%%
# The graded character equals the product formula.

chi = graded_character(spec, 5)
print(chi == goettsche_series(topo, 5))
print(chi)
