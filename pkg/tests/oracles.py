"""Independent reference computations used by the tests.

Nothing here imports the package; everything is plain dict/int arithmetic
or published values.
"""

from __future__ import annotations

from math import comb
from typing import Dict, Iterator, Tuple

# Ramanujan tau(n), n = 1..12 (OEIS A000594)
RAMANUJAN_TAU = [1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920, 534612, -370944]

# eta(i) = Gamma(1/4) / (2 pi^(3/4))
ETA_AT_I = 0.76822542232605665

# irreducible dimensions of the binary polyhedral groups
POLYHEDRAL_DIMS = {
    "binary_tetrahedral": sorted([1, 1, 1, 2, 2, 2, 3]),
    "binary_octahedral": sorted([1, 1, 2, 2, 2, 3, 3, 4]),
    "binary_icosahedral": sorted([1, 2, 2, 3, 3, 4, 4, 5, 6]),
}


def partitions(n: int, largest: int | None = None) -> Iterator[Tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def colored_partition_counts(colors: int, top: int) -> list[int]:
    """Coefficients of prod (1 - q^n)^(-colors) by counting multisets."""
    out = [0] * (top + 1)
    out[0] = 1
    for n in range(1, top + 1):
        for _ in range(colors):
            for m in range(n, top + 1):
                out[m] += out[m - n]
    return out


def _gen_binom(e: int, k: int) -> int:
    # coefficient of x^k in (1 - x)^e, any integer e
    if e >= 0:
        return (-1) ** k * comb(e, k)
    return comb(-e + k - 1, k)


def goettsche_naive(betti, order: int) -> Dict[Tuple[int, int], int]:
    """Expand prod_m prod_i (1 - (-t)^(2m-2+i) q^m)^(-(-1)^i b_i) term by term."""
    series: Dict[Tuple[int, int], int] = {(0, 0): 1}
    for m in range(1, order + 1):
        for i, b in enumerate(betti):
            if b == 0:
                continue
            d = 2 * m - 2 + i
            sgn = (-1) ** d
            e = (-1) ** (i + 1) * b
            new: Dict[Tuple[int, int], int] = {}
            for (qn, tn), c in series.items():
                k = 0
                while qn + k * m <= order:
                    coef = _gen_binom(e, k) * sgn**k
                    if coef:
                        key = (qn + k * m, tn + k * d)
                        new[key] = new.get(key, 0) + c * coef
                    k += 1
                    if e >= 0 and k > e:
                        break
            series = {k: v for k, v in new.items() if v}
    return series


def divisor_sigma(n: int, r: int) -> int:
    return sum(d**r for d in range(1, n + 1) if n % d == 0)
