"""Finite subgroups of SU(2), their character tables and McKay graphs.

Groups are generated numerically from unit quaternions written as 2x2
unitary matrices and closed under multiplication.  The character table comes
from simultaneous eigenvectors of the class-multiplication matrices
(Burnside's algorithm).  Tensoring with the defining 2-dimensional
representation gives the McKay graph, which is then matched node by node
against the affine Cartan matrices in :mod:`hilbert_hecke.affine`.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .affine import AffineAlgebra, build_algebra

__all__ = [
    "EPS",
    "GroupSpec",
    "GroupData",
    "McKayGraph",
    "McKayMatch",
    "enumerate_group",
    "character_table",
    "group_data",
    "mckay_graph",
    "match_ade",
    "mckay_correspondence",
]

EPS = 1e-9
# every rounding to an integer must land this close
ROUND_TOL = 1e-6

FAMILIES = ("cyclic", "binary_dihedral", "binary_tetrahedral", "binary_octahedral", "binary_icosahedral")


@dataclass(frozen=True)
class GroupSpec:
    family: str
    k: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "cyclic" and self.k < 2:
            raise ValueError("cyclic(k) needs k >= 2; the trivial group has no affine diagram")
        if self.family == "binary_dihedral" and self.k < 2:
            raise ValueError("binary_dihedral(k) needs k >= 2")

    @property
    def expected_order(self) -> int:
        return {
            "cyclic": self.k,
            "binary_dihedral": 4 * self.k,
            "binary_tetrahedral": 24,
            "binary_octahedral": 48,
            "binary_icosahedral": 120,
        }[self.family]

    @property
    def name(self) -> str:
        return f"{self.family}({self.k})" if self.family in ("cyclic", "binary_dihedral") else self.family

    @classmethod
    def parse(cls, text: str) -> GroupSpec:
        """Accepts ``cyclic-5``, ``binary-dihedral-3``, ``binary-icosahedral``, ``2I`` ..."""
        t = text.strip().lower().replace("-", "_")
        short = {"2t": "binary_tetrahedral", "2o": "binary_octahedral", "2i": "binary_icosahedral"}
        if t in short:
            return cls(short[t])
        m = re.fullmatch(r"(cyclic|binary_dihedral)_?\(?(\d+)\)?", t)
        if m:
            return cls(m.group(1), int(m.group(2)))
        return cls(t)


def _quat(a: float, b: float, c: float, d: float) -> np.ndarray:
    """``a + b i + c j + d k`` as an element of SU(2)."""
    return np.array([[a + 1j * b, c + 1j * d], [-c + 1j * d, a - 1j * b]])


def _generators(spec: GroupSpec) -> List[np.ndarray]:
    if spec.family == "cyclic":
        z = np.exp(2j * np.pi / spec.k)
        return [np.diag([z, 1 / z])]
    if spec.family == "binary_dihedral":
        z = np.exp(1j * np.pi / spec.k)
        return [np.diag([z, 1 / z]), _quat(0, 0, 1, 0)]
    if spec.family == "binary_tetrahedral":
        return [_quat(0, 1, 0, 0), _quat(0, 0, 1, 0), _quat(0.5, 0.5, 0.5, 0.5)]
    if spec.family == "binary_octahedral":
        s = 1 / math.sqrt(2)
        return [_quat(0.5, 0.5, 0.5, 0.5), _quat(s, s, 0, 0)]
    phi = (1 + math.sqrt(5)) / 2
    return [_quat(0.5, 0.5, 0.5, 0.5), _quat(phi / 2, 1 / (2 * phi), 0.5, 0)]


class _ElementIndex:
    """Tolerance-based lookup of 2x2 matrices in a growing list."""

    def __init__(self):
        self.elements: List[np.ndarray] = []
        self._flat = np.zeros((0, 4), dtype=complex)

    def find(self, g: np.ndarray) -> Optional[int]:
        if not self.elements:
            return None
        dist = np.abs(self._flat - g.reshape(1, 4)).max(axis=1)
        i = int(dist.argmin())
        return i if dist[i] < 1e-6 else None

    def add(self, g: np.ndarray) -> int:
        self.elements.append(g)
        self._flat = np.vstack([self._flat, g.reshape(1, 4)])
        return len(self.elements) - 1


def enumerate_group(spec: GroupSpec, max_order: int = 1000) -> List[np.ndarray]:
    """Close the generators under multiplication; identity comes first."""
    index = _ElementIndex()
    index.add(np.eye(2, dtype=complex))
    gens = _generators(spec)
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            for g in gens:
                h = index.elements[i] @ g
                if index.find(h) is None:
                    nxt.append(index.add(h))
                    if len(index.elements) > max_order:
                        raise RuntimeError(f"closure of {spec.name} exceeded {max_order} elements")
        frontier = nxt
    els = index.elements
    if len(els) != spec.expected_order:
        raise RuntimeError(f"{spec.name}: closure has {len(els)} elements, expected {spec.expected_order}")
    for g in els:
        if np.abs(g @ g.conj().T - np.eye(2)).max() > EPS or abs(np.linalg.det(g) - 1) > EPS:
            raise RuntimeError(f"{spec.name}: non-SU(2) element produced")
    return els


@dataclass
class GroupData:
    spec: GroupSpec
    elements: List[np.ndarray]
    mult_table: np.ndarray  # mult_table[i, j] = index of elements[i] @ elements[j]
    classes: List[List[int]]
    char_table: np.ndarray  # rows irreps, columns classes
    dims: Tuple[int, ...]
    defining_char: np.ndarray

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def class_sizes(self) -> np.ndarray:
        return np.array([len(c) for c in self.classes])


def _multiplication_table(elements: Sequence[np.ndarray]) -> np.ndarray:
    index = _ElementIndex()
    for g in elements:
        index.add(g)
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for i, g in enumerate(elements):
        for j, h in enumerate(elements):
            k = index.find(g @ h)
            if k is None:
                raise RuntimeError("element set is not closed under multiplication")
            table[i, j] = k
    return table


def _conjugacy_classes(table: np.ndarray) -> List[List[int]]:
    n = len(table)
    identity = next(i for i in range(n) if (table[i] == np.arange(n)).all())
    inverse = [int(np.nonzero(table[i] == identity)[0][0]) for i in range(n)]
    seen = [False] * n
    classes = []
    for g in range(n):
        if seen[g]:
            continue
        cls = sorted({int(table[table[h, g], inverse[h]]) for h in range(n)})
        for x in cls:
            seen[x] = True
        classes.append(cls)
    return classes


def character_table(
    elements: Sequence[np.ndarray], rng: np.random.Generator | None = None, attempts: int = 10
) -> Tuple[np.ndarray, Tuple[int, ...], List[List[int]], np.ndarray]:
    """Burnside's class-sum eigenvector method.

    Returns ``(char_table, dims, classes, mult_table)``.  Row 0 is the trivial
    representation; the remaining rows are sorted by dimension.
    """
    rng = rng if rng is not None else np.random.default_rng(0)
    table = _multiplication_table(elements)
    classes = _conjugacy_classes(table)
    order = len(elements)
    r = len(classes)
    sizes = np.array([len(c) for c in classes], dtype=float)
    class_of = np.empty(order, dtype=np.int64)
    for idx, cls in enumerate(classes):
        class_of[cls] = idx

    # M[a][b, c] = #{(x, y) in C_a x C_b : x y = z} for a fixed z in C_c
    reps = [cls[0] for cls in classes]
    M = np.zeros((r, r, r))
    for a, ca in enumerate(classes):
        for x in ca:
            for y in range(order):
                z = table[x, y]
                c = class_of[z]
                if z == reps[c]:
                    M[a, class_of[y], c] += 1

    for _ in range(attempts):
        coeffs = rng.normal(size=r)
        combo = np.tensordot(coeffs, M, axes=1)
        vals, vecs = np.linalg.eig(combo)
        gaps = np.abs(vals[:, None] - vals[None, :]) + np.eye(r)
        if gaps.min() > 1e-6:
            break
    else:
        raise RuntimeError("class-sum eigenvalues stayed degenerate")

    rows = []
    dims = []
    for v in vecs.T:
        omega = v / v[0]  # central character, omega(identity class) = 1
        d2 = order / np.sum(np.abs(omega) ** 2 / sizes)
        d = round(math.sqrt(d2.real))
        if abs(math.sqrt(d2.real) - d) > ROUND_TOL:
            raise RuntimeError(f"irrep dimension {math.sqrt(d2.real)} is not an integer")
        rows.append(d * omega / sizes)
        dims.append(d)
    chars = np.array(rows)
    trivial = int(np.argmin(np.abs(chars - 1).max(axis=1)))
    rest = sorted((i for i in range(r) if i != trivial), key=lambda i: (dims[i], -chars[i].real.sum(), -chars[i].imag.sum()))
    perm = [trivial] + rest
    chars = chars[perm]
    dims = tuple(dims[i] for i in perm)

    gram = (chars * sizes) @ chars.conj().T / order
    if np.abs(gram - np.eye(r)).max() > ROUND_TOL:
        raise RuntimeError("character table fails row orthogonality")
    if sum(d * d for d in dims) != order:
        raise RuntimeError(f"sum of squared dimensions {sum(d * d for d in dims)} != {order}")
    return chars, dims, classes, table


def group_data(spec: GroupSpec) -> GroupData:
    elements = enumerate_group(spec)
    chars, dims, classes, table = character_table(elements)
    defining = np.array([np.trace(elements[cls[0]]) for cls in classes])
    return GroupData(spec, elements, table, classes, chars, dims, defining)


@dataclass
class McKayGraph:
    adjacency: np.ndarray
    node_dims: Tuple[int, ...]
    max_rounding_error: float = 0.0

    def cartan(self) -> np.ndarray:
        return 2 * np.eye(len(self.node_dims), dtype=np.int64) - self.adjacency


def mckay_graph(data: GroupData) -> McKayGraph:
    """``m_jk`` = multiplicity of ``rho_k`` in ``rho_j (x) Q``."""
    sizes = data.class_sizes
    chi = data.char_table
    raw = (chi * sizes * data.defining_char) @ chi.conj().T / data.order
    adj = np.rint(raw.real).astype(np.int64)
    err = float(np.abs(raw - adj).max())
    if err > ROUND_TOL:
        raise RuntimeError(f"McKay multiplicities are not integral (error {err:.2e})")
    return McKayGraph(adj, data.dims, err)


@dataclass
class McKayMatch:
    label: str
    algebra: AffineAlgebra
    perm: Tuple[int, ...]  # perm[node] = irrep index


def _candidate_labels(nodes: int) -> List[str]:
    n = nodes - 1
    out = [f"A{n}"] if n >= 1 else []
    if n >= 4:
        out.append(f"D{n}")
    if n in (6, 7, 8):
        out.append(f"E{n}")
    return out


def match_ade(graph: McKayGraph) -> McKayMatch:
    """Find an affine ADE type and a node bijection carrying the trivial irrep to node 0.

    Backtracking over assignments, pruned by adjacency with already-placed
    nodes.  Dimensions are not used here, so comparing them with the marks
    afterwards is a genuine check.
    """
    size = len(graph.node_dims)
    adj = graph.adjacency
    dims = graph.node_dims
    for label in _candidate_labels(size):
        alg = build_algebra(label)
        target = -(alg.cartan - 2 * np.eye(size, dtype=np.int64))
        perm = _search(target, adj)
        if perm is not None:
            return McKayMatch(label, alg, perm)
    raise ValueError(f"no affine ADE diagram matches this McKay graph (dims {dims})")


def _search(target: np.ndarray, adj: np.ndarray) -> Optional[Tuple[int, ...]]:
    size = len(adj)
    perm: List[int] = []
    used = [False] * size

    def ok(node: int, irrep: int) -> bool:
        if adj[irrep, irrep] != target[node, node]:
            return False
        return all(adj[irrep, perm[m]] == target[node, m] for m in range(node))

    def rec(node: int) -> bool:
        if node == size:
            return True
        choices = [0] if node == 0 else range(1, size)
        for irrep in choices:
            if not used[irrep] and ok(node, irrep):
                used[irrep] = True
                perm.append(irrep)
                if rec(node + 1):
                    return True
                perm.pop()
                used[irrep] = False
        return False

    return tuple(perm) if rec(0) else None


def mckay_correspondence(spec: GroupSpec) -> Dict:
    """Everything about one group as a JSON-ready dict."""
    data = group_data(spec)
    graph = mckay_graph(data)
    match = match_ade(graph)
    marks_from_dims = [data.dims[i] for i in match.perm]
    return {
        "group": spec.name,
        "order": data.order,
        "dims": list(data.dims),
        "sum_dims_squared": sum(d * d for d in data.dims),
        "adjacency": graph.adjacency.tolist(),
        "matched_type": match.label,
        "permutation": list(match.perm),
        "marks": list(match.algebra.marks),
        "dims_in_node_order": marks_from_dims,
        "marks_match": marks_from_dims == list(match.algebra.marks),
        "cartan_match": bool(
            (graph.cartan()[np.ix_(match.perm, match.perm)] == match.algebra.cartan).all()
        ),
        "max_rounding_error": graph.max_rounding_error,
    }
