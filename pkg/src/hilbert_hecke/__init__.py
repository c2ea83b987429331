"""Generating functions, Fock spaces, affine characters, McKay graphs and Hecke operators.

Submodules:

- ``series``: truncated bivariate power series with exact coefficients
- ``goettsche``: Betti-number generating function of Hilbert schemes of points
- ``fock``: super Heisenberg Fock space with creation / annihilation operators
- ``affine``: affine ADE Cartan data, Freudenthal and Weyl-Kac characters
- ``mckay``: McKay graphs of finite subgroups of SU(2)
- ``hecke``: q-expansions, Hecke operators, Dedekind eta
- ``verify``: the cross-check suite
"""

from .series import BiSeries, OrderMismatch
from .goettsche import (
    SurfaceTopology,
    euler_series,
    euler_series_direct,
    goettsche_series,
    orbifold_euler_bruteforce,
    poincare_polynomial,
)
from .fock import ColorSpec, CommutatorConstants, FockState, FockVector, check_relations, graded_character
from .affine import (
    AffineAlgebra,
    WeightTable,
    build_algebra,
    character_q_series,
    freudenthal_multiplicities,
    level,
    weyl_kac_character,
)
from .mckay import GroupSpec, group_data, match_ade, mckay_correspondence, mckay_graph
from .hecke import QExpansion, delta, eisenstein, eta_modularity_check, hecke_T, is_eigenform
from .verify import run_suite

__version__ = "0.1.0"
