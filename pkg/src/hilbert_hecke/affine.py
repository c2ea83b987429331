"""Affine ADE Kac-Moody data and integrable highest-weight characters.

Node conventions (node 0 is always the affine node):

* ``A_n``: the cycle ``0 - 1 - ... - n - 0``; for ``n = 1`` a double edge.
* ``D_n``: nodes 0 and 1 hang off node 2, the chain ``2 - ... - (n-2)``,
  nodes ``n-1`` and ``n`` hang off ``n-2``.
* ``E_6``: centre 2 with arms ``2-1-0``, ``2-3-4``, ``2-5-6``.
* ``E_7``: the chain ``0 - 1 - ... - 6`` with node 7 on the centre 3.
* ``E_8``: the chain ``0 - 1 - ... - 7`` with node 8 on the centre 5.

A weight of ``L(Lambda)`` is stored by its descent vector ``c``, meaning
``Lambda - sum_k c_k alpha_k``; ``c_0`` is the depth in ``delta`` and is the
grading read off by :func:`character_q_series`.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .series import BiSeries

__all__ = [
    "AffineAlgebra",
    "WeightTable",
    "build_algebra",
    "level",
    "freudenthal_multiplicities",
    "weyl_kac_character",
    "character_q_series",
    "reflect",
    "FreudenthalError",
]

Descent = Tuple[int, ...]

# dense grid used by weyl_kac_character; E-types beyond very small depth exceed it
MAX_GRID_CELLS = 20_000_000


class FreudenthalError(ArithmeticError):
    """The recursion hit a zero or non-integral denominator."""


@dataclass(frozen=True)
class AffineAlgebra:
    label: str
    family: str
    rank: int
    cartan: np.ndarray = field(repr=False, compare=False)
    marks: Tuple[int, ...]

    @property
    def size(self) -> int:
        return self.rank + 1

    def form(self, x: Sequence[int], y: Sequence[int]) -> int:
        """Invariant form on the root lattice, ``(alpha_k, alpha_k) = 2``."""
        return int(np.asarray(x) @ self.cartan @ np.asarray(y))

    def finite_roots(self) -> List[Descent]:
        """All roots of the underlying finite system, as descent vectors with ``c_0 = 0``."""
        n = self.size
        A = self.cartan
        simple = [tuple(int(k == j) for k in range(n)) for j in range(1, n)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for beta in frontier:
                for k in range(1, n):
                    p = sum(beta[j] * int(A[j, k]) for j in range(n))
                    image = tuple(b - p * int(k == j) for j, b in enumerate(beta))
                    if image not in seen:
                        seen.add(image)
                        nxt.append(image)
            frontier = nxt
        return sorted(seen)

    def positive_roots(self, depth: int) -> List[Tuple[Descent, int]]:
        """Positive roots with ``c_0 <= depth`` and their multiplicities."""
        delta = self.marks
        out = []
        for beta in self.finite_roots():
            if all(b >= 0 for b in beta):
                out.append((beta, 1))
        for m in range(1, depth + 1):
            for beta in self.finite_roots():
                out.append((tuple(m * d + b for d, b in zip(delta, beta)), 1))
            out.append((tuple(m * d for d in delta), self.rank))
        return out


def _parse_label(label: str) -> Tuple[str, int]:
    m = re.fullmatch(r"\s*([ADEade])_?(\d+)\s*", label)
    if not m:
        raise ValueError(f"not an ADE label: {label!r}")
    family, n = m.group(1).upper(), int(m.group(2))
    ok = (family == "A" and n >= 1) or (family == "D" and n >= 4) or (family == "E" and n in (6, 7, 8))
    if not ok:
        raise ValueError(f"no simply-laced affine type {family}_{n}")
    return family, n


def _edges(family: str, n: int) -> List[Tuple[int, int]]:
    if family == "A":
        if n == 1:
            return [(0, 1), (0, 1)]
        return [(k, (k + 1) % (n + 1)) for k in range(n + 1)]
    if family == "D":
        edges = [(0, 2), (1, 2)] + [(k, k + 1) for k in range(2, n - 2)]
        return edges + [(n - 2, n - 1), (n - 2, n)]
    if n == 6:
        return [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]
    if n == 7:
        return [(k, k + 1) for k in range(6)] + [(3, 7)]
    return [(k, k + 1) for k in range(7)] + [(5, 8)]


def _kernel_vector(A: np.ndarray) -> List[Fraction]:
    """Rational kernel of a corank-one matrix, normalized so entry 0 is 1."""
    rows = [[Fraction(int(x)) for x in row] for row in A]
    n = len(rows)
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, n) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        raise ValueError(f"affine Cartan matrix should have corank 1, got {len(free)}")
    (fc,) = free
    vec = [Fraction(0)] * n
    vec[fc] = Fraction(1)
    for i, pc in enumerate(pivots):
        vec[pc] = -rows[i][fc]
    return [v / vec[0] for v in vec]


def build_algebra(label: str) -> AffineAlgebra:
    family, n = _parse_label(label)
    A = 2 * np.eye(n + 1, dtype=np.int64)
    for i, j in _edges(family, n):
        A[i, j] -= 1
        A[j, i] -= 1
    kernel = _kernel_vector(A)
    if any(v.denominator != 1 or v <= 0 for v in kernel):
        raise ValueError(f"kernel {kernel} is not a positive integer vector")
    marks = tuple(int(v) for v in kernel)
    assert not (A @ np.array(marks)).any()
    A.setflags(write=False)
    return AffineAlgebra(f"{family}{n}", family, n, A, marks)


def level(alg: AffineAlgebra, w: Sequence[int]) -> int:
    """``sum_k a_k w_k``; marks and comarks coincide in the simply-laced case."""
    _check_weight(alg, w)
    return sum(a * x for a, x in zip(alg.marks, w))


def _check_weight(alg: AffineAlgebra, w: Sequence[int]) -> None:
    if len(w) != alg.size:
        raise ValueError(f"{alg.label} needs {alg.size} weight entries, got {len(w)}")
    if any(x < 0 for x in w):
        raise ValueError(f"dominant weight entries must be nonnegative: {tuple(w)}")


@dataclass
class WeightTable:
    algebra: str
    weight: Tuple[int, ...]
    depth: int
    mults: Dict[Descent, int]

    def __getitem__(self, c: Descent) -> int:
        return self.mults.get(tuple(c), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightTable):
            return NotImplemented
        return (self.algebra, self.weight, self.depth, self.mults) == (
            other.algebra, other.weight, other.depth, other.mults
        )

    def __len__(self):
        return len(self.mults)

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "weight": list(self.weight),
            "depth": self.depth,
            "entries": [{"c": list(c), "mult": str(m)} for c, m in sorted(self.mults.items())],
        }

    @classmethod
    def from_dict(cls, data) -> WeightTable:
        mults = {tuple(e["c"]): int(e["mult"]) for e in data["entries"]}
        return cls(data["algebra"], tuple(data["weight"]), int(data["depth"]), mults)


def reflect(alg: AffineAlgebra, w: Sequence[int], c: Descent, k: int) -> Descent:
    """Descent vector of ``s_k`` applied to the weight with descent ``c``."""
    pairing = w[k] - sum(c[j] * int(alg.cartan[j, k]) for j in range(alg.size))
    out = list(c)
    out[k] += pairing
    return tuple(out)


def freudenthal_multiplicities(alg: AffineAlgebra, w: Sequence[int], depth: int) -> WeightTable:
    """Weight multiplicities of ``L(Lambda)`` down to ``delta``-depth ``depth``.

    Freudenthal's formula

        ((L+r, L+r) - (mu+r, mu+r)) m(mu) = 2 sum_{alpha>0} mult(alpha) sum_{j>=1} (mu + j alpha, alpha) m(mu + j alpha)

    is solved weight by weight in order of height.  Only descents reachable
    from weights already known to occur are visited.
    """
    _check_weight(alg, w)
    if level(alg, w) < 1:
        raise ValueError("highest weight must have positive level")
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    n = alg.size
    A = alg.cartan
    w = tuple(int(x) for x in w)
    roots = alg.positive_roots(depth)
    root_arr = np.array([r for r, _ in roots], dtype=np.int64)
    root_mult = [m for _, m in roots]
    # (alpha, alpha), (Lambda, alpha) and the row alpha^T A for every root
    root_norm = [alg.form(r, r) for r, _ in roots]
    root_lam = [sum(x * y for x, y in zip(w, r)) for r, _ in roots]
    root_A = (root_arr @ A).tolist()
    root_list = [tuple(r) for r, _ in roots]
    root_support = [[k for k in range(n) if r[k]] for r in root_list]
    A_rows = A.tolist()

    mults: Dict[Descent, int] = {(0,) * n: 1}
    layer = {(0,) * n}
    while layer:
        nxt = set()
        for c in layer:
            if mults.get(c, 0) == 0:
                continue
            for k in range(n):
                if k == 0 and c[0] >= depth:
                    continue
                nxt.add(c[:k] + (c[k] + 1,) + c[k + 1 :])
        for c in sorted(nxt):
            lhs = 2 * sum((w[k] + 1) * c[k] for k in range(n)) - sum(
                c[i] * A_rows[i][j] * c[j] for i in range(n) for j in range(n) if c[i] and c[j]
            )
            rhs = 0
            for r, alpha in enumerate(root_list):
                # largest j with c - j alpha still >= 0
                jmax = min(c[k] // alpha[k] for k in root_support[r])
                if jmax == 0:
                    continue
                # (mu + j alpha, alpha) = (Lambda, alpha) - (c, alpha) + j (alpha, alpha)
                base = root_lam[r] - sum(a * x for a, x in zip(root_A[r], c))
                shifted = c
                for j in range(1, jmax + 1):
                    shifted = tuple(x - a for x, a in zip(shifted, alpha))
                    m = mults.get(shifted)
                    if m:
                        rhs += root_mult[r] * (base + j * root_norm[r]) * m
            rhs *= 2
            if lhs == 0:
                if rhs != 0:
                    raise FreudenthalError(f"zero denominator at descent {c} with numerator {rhs}")
                continue
            value, rem = divmod(rhs, lhs)
            if rem or value < 0:
                raise FreudenthalError(f"multiplicity {rhs}/{lhs} at descent {c} is not a nonnegative integer")
            if value:
                mults[c] = value
        layer = nxt
    return WeightTable(alg.label, w, depth, mults)


def _weyl_numerator(alg: AffineAlgebra, w: Tuple[int, ...], shape: Sequence[int]) -> Dict[Descent, int]:
    """Signed descents of ``v(Lambda + rho) - (Lambda + rho)`` lying inside ``shape``.

    A simple reflection only ever raises a descent, so every orbit point in
    the box is reached through points that are also in the box.
    """
    n = alg.size
    A = alg.cartan
    top = (0,) * n
    signs = {top: 1}
    frontier = [top]
    while frontier:
        nxt = []
        for c in frontier:
            for k in range(n):
                # <Lambda + rho - sum c_j alpha_j, alpha_k^vee>
                p = w[k] + 1 - sum(c[j] * int(A[j, k]) for j in range(n))
                if p <= 0:
                    continue
                image = c[:k] + (c[k] + p,) + c[k + 1 :]
                if image[k] >= shape[k] or image in signs:
                    continue
                signs[image] = -signs[c]
                nxt.append(image)
        frontier = nxt
    return signs


def weyl_kac_character(alg: AffineAlgebra, w: Sequence[int], depth: int) -> WeightTable:
    """The same table as :func:`freudenthal_multiplicities`, from the Weyl-Kac formula.

    The alternating orbit sum is multiplied by the inverse of the denominator
    factors with ``c_0 >= 1`` (finitely many terms below ``depth``), and the
    finite factors ``1 - e^{-alpha}`` are then divided out on the same grid.
    The box holds cells that no weight can reach, and the result is checked
    to vanish on them.
    """
    _check_weight(alg, w)
    if level(alg, w) < 1:
        raise ValueError("highest weight must have positive level")
    w = tuple(int(x) for x in w)
    n = alg.size
    affine_roots = [(r, m) for r, m in alg.positive_roots(depth) if r[0] >= 1]
    finite_pos = [r for r, _ in alg.positive_roots(0)]
    # every weight lies in this box; each division below only looks at smaller
    # descents, so the box is all that is needed
    bound = _weight_bounds(alg, w, depth)
    shape = tuple(b + 1 for b in bound)
    cells = int(np.prod([float(s) for s in shape]))
    if cells > MAX_GRID_CELLS:
        raise ValueError(
            f"Weyl-Kac grid {shape} has {cells} cells (limit {MAX_GRID_CELLS}); "
            "lower the depth or use freudenthal_multiplicities"
        )
    numerator = _weyl_numerator(alg, w, shape)

    dtype = _safe_dtype(affine_roots, depth, len(numerator))
    inv = np.zeros(shape, dtype=dtype)
    inv[(0,) * n] = 1
    for r, mult in affine_roots:
        for _ in range(mult):
            _divide_geometric_inplace(inv, r)
    prod = np.zeros(shape, dtype=dtype)
    for c, sign in numerator.items():
        src = tuple(slice(0, shape[k] - c[k]) for k in range(n))
        dst = tuple(slice(c[k], shape[k]) for k in range(n))
        prod[dst] += sign * inv[src]

    for alpha in finite_pos:
        _divide_finite_inplace(prod, alpha)
    # weights satisfy c^T A c <= 2 sum (w_k + 1) c_k; the box corners do not
    grid = np.indices(shape).reshape(n, -1)
    quad = np.einsum("ip,ij,jp->p", grid, alg.cartan, grid)
    outside = (quad > 2 * (np.array(w) + 1) @ grid).reshape(shape)
    if prod[outside].any() or (prod < 0).any():
        raise ArithmeticError("Weyl-Kac quotient has weights outside the allowed region or negative entries")
    mults = {tuple(int(x) for x in idx): int(prod[idx]) for idx in zip(*np.nonzero(prod))}
    return WeightTable(alg.label, w, depth, mults)


def _weight_bounds(alg: AffineAlgebra, w: Tuple[int, ...], depth: int) -> List[int]:
    """Coordinate-wise upper bounds on descents of weights of ``L(Lambda)``.

    Every weight ``mu`` satisfies ``|mu + rho|^2 <= |Lambda + rho|^2``, i.e.
    ``c^T A c <= 2 sum_k (w_k + 1) c_k``.  For fixed ``c_0`` this confines the
    remaining coordinates to an ellipsoid whose extent is available in closed form.
    """
    A = alg.cartan.astype(float)
    w1 = np.array(w, dtype=float) + 1
    Af_inv = np.linalg.inv(A[1:, 1:])
    out = [depth] + [0] * alg.rank
    for c0 in range(depth + 1):
        b = w1[1:] - c0 * A[0, 1:]
        centre = Af_inv @ b
        radius2 = 2 * w1[0] * c0 - A[0, 0] * c0 * c0 + b @ centre
        if radius2 < 0:
            continue
        ext = centre + np.sqrt(radius2 * np.diag(Af_inv))
        for k in range(alg.rank):
            out[k + 1] = max(out[k + 1], int(np.floor(ext[k] + 1e-9)))
    return out


def _safe_dtype(affine_roots, depth: int, num_terms: int):
    # every coefficient is bounded by the one-variable series prod (1 - q^{c_0})^{-mult}
    bound = [1] + [0] * depth
    for r, mult in affine_roots:
        for _ in range(mult):
            for j in range(r[0], depth + 1):
                bound[j] += bound[j - r[0]]
    return np.int64 if max(bound) * num_terms < 2**62 else object


def _divide_geometric_inplace(arr: np.ndarray, alpha: Descent) -> None:
    """Multiply ``arr`` by ``1 / (1 - x^alpha)`` for an ``alpha`` with ``alpha_0 >= 1``."""
    shape = arr.shape
    if any(a >= s for a, s in zip(alpha[1:], shape[1:])):
        return
    a0 = alpha[0]
    src_rest = tuple(slice(0, shape[k] - alpha[k]) for k in range(1, len(shape)))
    dst_rest = tuple(slice(alpha[k], shape[k]) for k in range(1, len(shape)))
    for j in range(a0, shape[0]):
        arr[(j,) + dst_rest] += arr[(j - a0,) + src_rest]


def _divide_finite_inplace(arr: np.ndarray, alpha: Descent) -> None:
    """Multiply ``arr`` by ``1 / (1 - x^alpha)`` for a finite root (``alpha_0 = 0``).

    Runs along one coordinate where ``alpha`` is positive, so each slice sees
    the already-updated slice ``alpha`` below it.
    """
    shape = arr.shape
    k = next(i for i, a in enumerate(alpha) if a > 0)
    src = [slice(0, shape[i] - alpha[i]) for i in range(len(shape))]
    dst = [slice(alpha[i], shape[i]) for i in range(len(shape))]
    if any(alpha[i] >= shape[i] for i in range(len(shape))):
        return
    for v in range(alpha[k], shape[k]):
        src[k] = v - alpha[k]
        dst[k] = v
        arr[tuple(dst)] += arr[tuple(src)]


def character_q_series(table: WeightTable) -> BiSeries:
    """Total multiplicity at each ``delta``-depth, as a series in ``q``."""
    terms: Dict[Tuple[int, int], int] = defaultdict(int)
    for c, m in table.mults.items():
        terms[(c[0], 0)] += m
    return BiSeries(table.depth, terms)
