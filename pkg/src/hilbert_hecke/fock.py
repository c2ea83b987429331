"""Heisenberg/Clifford Fock space on colored super-partitions.

Each color ``a`` stands for one basis class of the surface's cohomology and
carries its degree ``0..4``.  Even colors give bosonic oscillators, odd colors
fermionic ones.  For every part ``(i, a)`` with ``i >= 1`` there is a creator
``F_i^a`` (free, no constant) and an annihilator ``E_i^a`` carrying the
constant ``c_i``; together they satisfy

    E_x E_y = (-1)^{p(x)p(y)} E_y E_x
    F_x F_y = (-1)^{p(x)p(y)} F_y F_x
    E_x F_y = (-1)^{p(x)p(y)} F_y E_x + delta_{xy} c_i Id

Fermionic parts are kept sorted by ``(i, a)``.  A basis state stands for
``F_{p_1} ... F_{p_k} |0>`` with ``p_1 < ... < p_k`` (bosonic creators in
front, they commute with everything), so moving an odd operator to position
``j`` costs ``(-1)^j``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from bisect import bisect_left
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .goettsche import SurfaceTopology
from .series import BiSeries

__all__ = [
    "Color",
    "ColorSpec",
    "FockState",
    "FockVector",
    "CommutatorConstants",
    "VACUUM",
    "create",
    "annihilate",
    "basis_states",
    "graded_character",
    "RelationReport",
    "super_commutator_check",
    "check_relations",
]

Part = Tuple[int, int]  # (i, color id)


@dataclass(frozen=True)
class Color:
    id: int
    degree: int

    def __post_init__(self):
        if not 0 <= self.degree <= 4:
            raise ValueError(f"color degree must lie in 0..4, got {self.degree}")

    @property
    def parity(self) -> int:
        return self.degree % 2


@dataclass(frozen=True)
class ColorSpec:
    colors: Tuple[Color, ...]

    def __post_init__(self):
        ids = [c.id for c in self.colors]
        if ids != list(range(len(ids))):
            raise ValueError("color ids must be 0..n-1 in order")

    @classmethod
    def from_topology(cls, topo: SurfaceTopology) -> ColorSpec:
        degrees = [i for i, b in enumerate(topo.betti) for _ in range(b)]
        return cls(tuple(Color(a, d) for a, d in enumerate(degrees)))

    def betti(self) -> Tuple[int, ...]:
        counts = Counter(c.degree for c in self.colors)
        return tuple(counts.get(i, 0) for i in range(5))

    def __len__(self):
        return len(self.colors)

    def __iter__(self):
        return iter(self.colors)

    def __getitem__(self, a: int) -> Color:
        return self.colors[a]


@dataclass(frozen=True, order=True)
class FockState:
    """Basis vector: a multiset of even parts and a sorted set of odd parts."""

    bosonic: Tuple[Part, ...] = ()
    fermionic: Tuple[Part, ...] = ()

    def __post_init__(self):
        if list(self.bosonic) != sorted(self.bosonic):
            raise ValueError("bosonic parts must be sorted")
        if any(x >= y for x, y in zip(self.fermionic, self.fermionic[1:])):
            raise ValueError("fermionic parts must be strictly increasing")
        if any(i < 1 for i, _ in self.bosonic + self.fermionic):
            raise ValueError("part sizes must be positive")

    def parts(self) -> Tuple[Part, ...]:
        return self.bosonic + self.fermionic

    def weight(self) -> int:
        return sum(i for i, _ in self.parts())

    def cohomological_degree(self, spec: ColorSpec) -> int:
        return sum(2 * i - 2 + spec[a].degree for i, a in self.parts())

    def __str__(self):
        if not self.bosonic and not self.fermionic:
            return "|0>"
        # bosonic parts, then fermionic parts after a semicolon
        bos = " ".join(f"{i}_{a}" for i, a in self.bosonic)
        fer = " ".join(f"{i}_{a}" for i, a in self.fermionic)
        return f"|{bos}; {fer}>" if fer else f"|{bos}>"


VACUUM = FockState()


def _raw_state(bosonic: tuple, fermionic: tuple) -> FockState:
    # trusted constructor for the operator kernels, which keep both tuples sorted
    s = object.__new__(FockState)
    object.__setattr__(s, "bosonic", bosonic)
    object.__setattr__(s, "fermionic", fermionic)
    return s


def _mode_constant(i: int) -> int:
    return i


@dataclass(frozen=True)
class CommutatorConstants:
    """The scalars ``c_i`` in ``[E_i^a, F_i^a] = c_i``; default ``c_i = i``."""

    c: Callable[[int], int] = _mode_constant

    def __call__(self, i: int) -> int:
        value = self.c(i)
        if value == 0:
            raise ValueError(f"c_{i} must be nonzero")
        return value


DEFAULT_CONSTANTS = CommutatorConstants()


class FockVector:
    """Finite linear combination of :class:`FockState` with rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Dict[FockState, Fraction] | None = None):
        self._terms = {s: Fraction(c) for s, c in (terms or {}).items() if c != 0}

    @classmethod
    def basis(cls, state: FockState) -> FockVector:
        return cls({state: Fraction(1)})

    @property
    def terms(self) -> Dict[FockState, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: FockVector) -> FockVector:
        out = dict(self._terms)
        for s, c in other._terms.items():
            out[s] = out.get(s, 0) + c
        return FockVector(out)

    def __sub__(self, other: FockVector) -> FockVector:
        return self + other * -1

    def __mul__(self, scalar) -> FockVector:
        return FockVector({s: c * scalar for s, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{s}" for s, c in sorted(self._terms.items())).replace("+ -", "- ")


# single-state kernels; return (sign or scale, new_state) or None for zero


def _create_state(color: Color, i: int, s: FockState) -> Optional[Tuple[int, FockState]]:
    part = (i, color.id)
    if color.parity == 0:
        bos = list(s.bosonic)
        pos = bisect_left(bos, part)
        bos.insert(pos, part)
        return 1, _raw_state(tuple(bos), s.fermionic)
    fer = list(s.fermionic)
    pos = bisect_left(fer, part)
    if pos < len(fer) and fer[pos] == part:
        return None
    fer.insert(pos, part)
    return (-1) ** pos, _raw_state(s.bosonic, tuple(fer))


def _annihilate_state(color: Color, i: int, s: FockState, ci: int) -> Optional[Tuple[int, FockState]]:
    part = (i, color.id)
    if color.parity == 0:
        mult = s.bosonic.count(part)
        if not mult:
            return None
        bos = list(s.bosonic)
        bos.remove(part)
        return ci * mult, _raw_state(tuple(bos), s.fermionic)
    fer = list(s.fermionic)
    pos = bisect_left(fer, part)
    if pos == len(fer) or fer[pos] != part:
        return None
    del fer[pos]
    return ci * (-1) ** pos, _raw_state(s.bosonic, tuple(fer))


def _apply(kernel, v: FockVector) -> FockVector:
    out: Dict[FockState, Fraction] = defaultdict(Fraction)
    for s, c in v.items():
        r = kernel(s)
        if r is not None:
            out[r[1]] += c * r[0]
    return FockVector(out)


def create(a: Color, i: int, v: FockVector) -> FockVector:
    if i < 1:
        raise ValueError("mode index must be positive")
    return _apply(lambda s: _create_state(a, i, s), v)


def annihilate(a: Color, i: int, v: FockVector, k: CommutatorConstants = DEFAULT_CONSTANTS) -> FockVector:
    if i < 1:
        raise ValueError("mode index must be positive")
    ci = k(i)
    return _apply(lambda s: _annihilate_state(a, i, s, ci), v)


def basis_states(spec: ColorSpec, weight: int) -> Iterator[FockState]:
    """All basis states of exactly the given weight."""
    slots = [(i, c) for i in range(1, weight + 1) for c in spec]

    def rec(k: int, remaining: int, bos: tuple, fer: tuple):
        if remaining == 0:
            yield FockState(bos, fer)
            return
        if k == len(slots):
            return
        i, color = slots[k]
        part = (i, color.id)
        top = remaining // i if color.parity == 0 else min(1, remaining // i)
        for m in range(top + 1):
            if color.parity == 0:
                nb, nf = bos + (part,) * m, fer
            else:
                nb, nf = bos, fer + (part,) * m
            yield from rec(k + 1, remaining - m * i, nb, nf)

    # slots are visited in increasing (i, a) order, so the tuples come out sorted
    for state in rec(0, weight, (), ()):
        yield state


def graded_character(spec: ColorSpec, q_order: int) -> BiSeries:
    """Sum of ``q^weight t^degree`` over all basis states up to ``q_order``.

    Counts states one by one; it deliberately does not use the product formula.
    """
    terms: Dict[Tuple[int, int], int] = defaultdict(int)
    for n in range(q_order + 1):
        for s in basis_states(spec, n):
            terms[(n, s.cohomological_degree(spec))] += 1
    return BiSeries(q_order, terms)


@dataclass
class RelationReport:
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: RelationReport) -> RelationReport:
        self.checked += other.checked
        self.failures.extend(other.failures)
        return self


Operator = Callable[[FockVector], FockVector]


def super_commutator_check(
    op1: Operator,
    op2: Operator,
    expected_scalar,
    sign_rule: int,
    test_states: Iterable[FockState],
    label: str = "",
) -> RelationReport:
    """Check ``op1 op2 - sign_rule * op2 op1 == expected_scalar * Id`` on each state."""
    report = RelationReport()
    for s in test_states:
        v = FockVector.basis(s)
        lhs = op1(op2(v)) - op2(op1(v)) * sign_rule
        rhs = v * expected_scalar
        report.checked += 1
        if lhs != rhs:
            report.failures.append(f"{label} on {s}: got {lhs}, expected {rhs}")
    return report


def check_relations(
    spec: ColorSpec,
    max_weight: int,
    max_index: int,
    constants: CommutatorConstants = DEFAULT_CONSTANTS,
    workers: int = 1,
) -> RelationReport:
    """Exhaustively verify all three relations on every state of weight <= max_weight.

    With ``workers > 1`` the states are split across processes; ``constants``
    must then be picklable (a module-level function, not a lambda).
    """
    states = [s for n in range(max_weight + 1) for s in basis_states(spec, n)]
    if workers <= 1 or len(states) < 2 * workers:
        return _check_relations_on(spec, states, max_index, constants)
    from concurrent.futures import ProcessPoolExecutor

    chunks = [states[k::workers] for k in range(workers)]
    report = RelationReport()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_check_relations_on, spec, chunk, max_index, constants) for chunk in chunks]
        for fut in futures:
            report.merge(fut.result())
    return report


def _check_relations_on(
    spec: ColorSpec,
    states: Sequence[FockState],
    max_index: int,
    constants: CommutatorConstants,
) -> RelationReport:
    gens = [(c, i) for c in spec for i in range(1, max_index + 1)]
    cs = [constants(i) for _, i in gens]
    signs = [[(-1) ** (x[0].parity * y[0].parity) for y in gens] for x in gens]
    names = [f"{i}_{c.id}" for c, i in gens]
    e_table: Dict[FockState, list] = {}
    f_table: Dict[FockState, list] = {}

    def e_images(s):
        row = e_table.get(s)
        if row is None:
            row = e_table[s] = [_annihilate_state(c, i, s, ci) for (c, i), ci in zip(gens, cs)]
        return row

    def f_images(s):
        row = f_table.get(s)
        if row is None:
            row = f_table[s] = [_create_state(c, i, s) for c, i in gens]
        return row

    def twice(first, second_row, idx):
        # apply generator idx after a first image; None means zero
        if first is None:
            return None
        r = second_row[idx]
        return None if r is None else (first[0] * r[0], r[1])

    def residual(lhs, rhs, sign, extra=None):
        # nonzero part of lhs - sign*rhs (+ extra), each a single term or None
        out: Dict[FockState, int] = {}
        if lhs is not None:
            out[lhs[1]] = lhs[0]
        if rhs is not None:
            out[rhs[1]] = out.get(rhs[1], 0) - sign * rhs[0]
        if extra is not None:
            out[extra[1]] = out.get(extra[1], 0) + extra[0]
        return {st: c for st, c in out.items() if c}

    report = RelationReport()
    ng = len(gens)
    for s in states:
        es, fs = e_images(s), f_images(s)
        # second-level image rows, indexed by the generator applied first
        e_es = [None if r is None else e_images(r[1]) for r in es]
        f_fs = [None if r is None else f_images(r[1]) for r in fs]
        f_es = [None if r is None else f_images(r[1]) for r in es]
        e_fs = [None if r is None else e_images(r[1]) for r in fs]
        for x in range(ng):
            ex, fx = es[x], fs[x]
            for y in range(ng):
                sign = signs[x][y]
                report.checked += 3
                # E_x E_y s and E_y E_x s; both vanish unless both parts are present
                lhs, rhs = twice(es[y], e_es[y] or (), x), twice(ex, e_es[x] or (), y)
                if lhs is not None or rhs is not None:
                    bad = residual(lhs, rhs, sign)
                    if bad:
                        report.failures.append(f"[E{names[x]}, E{names[y]}] on {s}: {bad}")
                lhs, rhs = twice(fs[y], f_fs[y] or (), x), twice(fx, f_fs[x] or (), y)
                if lhs is None or rhs is None or lhs[1] != rhs[1] or lhs[0] != sign * rhs[0]:
                    bad = residual(lhs, rhs, sign)
                    if bad:
                        report.failures.append(f"[F{names[x]}, F{names[y]}] on {s}: {bad}")
                delta = (-cs[x], s) if x == y else None
                lhs, rhs = twice(fs[y], e_fs[y] or (), x), twice(ex, f_es[x] or (), y)
                if lhs is not None or rhs is not None or delta is not None:
                    bad = residual(lhs, rhs, sign, delta)
                    if bad:
                        report.failures.append(f"[E{names[x]}, F{names[y]}] on {s}: residual {bad}")
    return report
