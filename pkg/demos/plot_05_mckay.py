"""
McKay graphs of finite subgroups of SU(2)
=========================================

Tensoring with the defining 2-dimensional representation gives a graph on
the irreducibles.  For every group here it is an affine ADE diagram, and the
dimensions are the marks.
"""

import numpy as np

from hilbert_hecke import GroupSpec, build_algebra, group_data, level, match_ade, mckay_correspondence, mckay_graph

#%%

for name in ["cyclic-4", "binary-dihedral-3", "2T", "2O", "2I"]:
    r = mckay_correspondence(GroupSpec.parse(name))
    print(f"{r['group']:<22} |G| = {r['order']:<4} type {r['matched_type']:<3} dims {r['dims_in_node_order']}")

#%%
# The binary icosahedral group in detail.

data = group_data(GroupSpec("binary_icosahedral"))
graph = mckay_graph(data)
print(np.round(data.char_table.real, 3))
print(graph.adjacency)

#%%
# Level of an affine weight = dimension of the corresponding representation
# sum_k w_k rho_k.

match = match_ade(graph)
alg = build_algebra(match.label)
w = [0, 1, 0, 0, 0, 0, 0, 0, 2]
print(level(alg, w), sum(data.dims[match.perm[k]] * w[k] for k in range(alg.size)))
