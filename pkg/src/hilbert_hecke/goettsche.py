"""Poincare polynomials of Hilbert schemes of points on a surface.

The generating function over ``n`` of ``P_t(Hilb^n X)`` is the product over
``m >= 1`` and ``i = 0..4`` of ``(1 - (-t)^(2m-2+i) q^m) ** ((-1)^(i+1) b_i)``.
``(-t)^(2m-2+i)`` has sign ``(-1)^i``, which is folded into each factor so
that everything stays an integer polynomial in ``t``.

The Euler specialization ``t = -1`` collapses this to
``prod_m (1 - q^m) ** (-e(X))``; :func:`orbifold_euler_bruteforce` recovers the
same numbers from commuting pairs in the symmetric group.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Dict, Sequence

import numpy as np

from .series import BiSeries, binomial_factor, coefficient, specialize_t

__all__ = [
    "SurfaceTopology",
    "goettsche_series",
    "euler_series",
    "euler_series_direct",
    "poincare_polynomial",
    "orbifold_euler_bruteforce",
    "ORBIFOLD_MAX_N",
]

ORBIFOLD_MAX_N = 7


@dataclass(frozen=True)
class SurfaceTopology:
    """Betti numbers ``(b_0, ..., b_4)`` of a compact complex surface."""

    betti: tuple

    def __init__(self, betti: Sequence[int], check_duality: bool = False):
        betti = tuple(int(b) for b in betti)
        if len(betti) != 5:
            raise ValueError(f"need 5 Betti numbers, got {len(betti)}")
        if any(b < 0 for b in betti):
            raise ValueError(f"Betti numbers must be nonnegative: {betti}")
        object.__setattr__(self, "betti", betti)
        if check_duality and not self.satisfies_duality():
            raise ValueError(f"Betti vector {betti} violates Poincare duality")

    @classmethod
    def parse(cls, text: str, check_duality: bool = False) -> SurfaceTopology:
        return cls([int(x) for x in text.split(",")], check_duality=check_duality)

    def euler(self) -> int:
        b0, b1, b2, b3, b4 = self.betti
        return b0 - b1 + b2 - b3 + b4

    def satisfies_duality(self) -> bool:
        b0, b1, _, b3, b4 = self.betti
        return b0 == b4 and b1 == b3


def goettsche_series(topo: SurfaceTopology, q_order: int) -> BiSeries:
    if q_order < 0:
        raise ValueError("q_order must be nonnegative")
    result = BiSeries.one(q_order)
    for m in range(1, q_order + 1):
        for i, b in enumerate(topo.betti):
            if b == 0:
                continue
            result = result * binomial_factor((-1) ** i, 2 * m - 2 + i, m, (-1) ** (i + 1) * b, q_order)
    return result


def euler_series(topo: SurfaceTopology, q_order: int) -> BiSeries:
    """Euler numbers of ``Hilb^n X``, obtained by setting ``t = -1``."""
    return specialize_t(goettsche_series(topo, q_order), -1)


def euler_series_direct(euler_number: int, q_order: int) -> BiSeries:
    """``prod_{m>=1} (1 - q^m) ** (-euler_number)``, built without ``t``."""
    result = BiSeries.one(q_order)
    for m in range(1, q_order + 1):
        result = result * binomial_factor(1, 0, m, -euler_number, q_order)
    return result


def poincare_polynomial(topo: SurfaceTopology, n: int) -> Dict[int, int]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return coefficient(goettsche_series(topo, n), n)


def _orbit_count(n: int, g: np.ndarray, h: np.ndarray) -> int:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = n
    for perm in (g, h):
        for x in range(n):
            rx, ry = find(x), find(int(perm[x]))
            if rx != ry:
                parent[rx] = ry
                count -= 1
    return count


def orbifold_euler_bruteforce(n: int, e_X: int) -> int:
    """Orbifold Euler number of ``S^n X`` from commuting pairs in ``S_n``.

    Averages ``e_X ** #orbits(<g, h>)`` over all commuting ``(g, h)`` and
    divides by ``n!``.  The cost is ``(n!)^2`` comparisons, hence the cap.
    """
    if not 1 <= n <= ORBIFOLD_MAX_N:
        raise ValueError(f"n must lie in 1..{ORBIFOLD_MAX_N}, got {n}")
    perms = np.array(list(permutations(range(n))), dtype=np.int8)
    total = 0
    for g in perms:
        # (h o g)[x] = h[g[x]]  and  (g o h)[x] = g[h[x]]
        commuting = np.all(perms[:, g] == g[perms], axis=1)
        for h in perms[commuting]:
            total += e_X ** _orbit_count(n, g, h)
    q, r = divmod(total, factorial(n))
    if r:
        raise ArithmeticError(f"commuting-pair sum {total} not divisible by {n}!")
    return q
