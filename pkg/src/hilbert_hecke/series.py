"""Exact truncated power series in ``q`` with polynomial coefficients in ``t``.

A :class:`BiSeries` is a sparse map ``(q_degree, t_degree) -> int`` together
with a truncation order ``N``: every term ``q^n t^d`` with ``n > N`` is
discarded.  Two series can only be combined when their orders agree.
"""

from __future__ import annotations

import json
from collections import defaultdict
from math import comb
from typing import Dict, Iterable, Mapping, Tuple

__all__ = [
    "BiSeries",
    "OrderMismatch",
    "add",
    "mul",
    "geometric_inverse",
    "binomial_factor",
    "specialize_t",
    "coefficient",
]

TPoly = Dict[int, int]


class OrderMismatch(ValueError):
    """Raised when two series with different truncation orders meet."""


class BiSeries:
    __slots__ = ("_order", "_coeffs", "_hash")

    def __init__(self, q_order: int, coeffs: Mapping[Tuple[int, int], int] | None = None):
        if q_order < 0:
            raise ValueError(f"q_order must be nonnegative, got {q_order}")
        clean = {}
        for (n, d), c in (coeffs or {}).items():
            if n < 0 or d < 0:
                raise ValueError(f"negative degree in term q^{n} t^{d}")
            if n > q_order or c == 0:
                continue
            clean[(int(n), int(d))] = int(c)
        self._order = int(q_order)
        self._coeffs = clean
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, q_order: int) -> BiSeries:
        return cls(q_order)

    @classmethod
    def one(cls, q_order: int) -> BiSeries:
        return cls(q_order, {(0, 0): 1})

    @classmethod
    def monomial(cls, q_order: int, q: int = 0, t: int = 0, c: int = 1) -> BiSeries:
        return cls(q_order, {(q, t): c})

    @classmethod
    def from_rows(cls, q_order: int, rows: Iterable[Mapping[int, int]]) -> BiSeries:
        """Build from a list of t-polynomials, one per q-degree starting at 0."""
        return cls(q_order, {(n, d): c for n, row in enumerate(rows) for d, c in row.items()})

    # accessors

    @property
    def q_order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> Dict[Tuple[int, int], int]:
        return dict(self._coeffs)

    def terms(self):
        """Nonzero terms ``(n, d, c)`` sorted by ``(n, d)``."""
        return [(n, d, c) for (n, d), c in sorted(self._coeffs.items())]

    def rows(self) -> list[TPoly]:
        out: list[TPoly] = [{} for _ in range(self._order + 1)]
        for (n, d), c in self._coeffs.items():
            out[n][d] = c
        return out

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, key: Tuple[int, int]) -> int:
        return self._coeffs.get(key, 0)

    # arithmetic

    def _check(self, other: BiSeries) -> None:
        if not isinstance(other, BiSeries):
            raise TypeError(f"expected BiSeries, got {type(other).__name__}")
        if other._order != self._order:
            raise OrderMismatch(f"q_order {self._order} vs {other._order}")

    def __add__(self, other: BiSeries) -> BiSeries:
        self._check(other)
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, 0) + c
        return BiSeries(self._order, out)

    def __neg__(self) -> BiSeries:
        return BiSeries(self._order, {k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: BiSeries) -> BiSeries:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return BiSeries(self._order, {k: c * other for k, c in self._coeffs.items()})
        self._check(other)
        N = self._order
        # group the right operand by q-degree so the inner loop skips impossible pairs
        by_q = defaultdict(list)
        for (n, d), c in other._coeffs.items():
            by_q[n].append((d, c))
        out: Dict[Tuple[int, int], int] = defaultdict(int)
        for (n1, d1), c1 in self._coeffs.items():
            for n2 in range(N - n1 + 1):
                for d2, c2 in by_q.get(n2, ()):
                    out[(n1 + n2, d1 + d2)] += c1 * c2
        return BiSeries(N, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        self._check(other)
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._order, frozenset(self._coeffs.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"BiSeries({self}, q_order={self._order})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for n, row in enumerate(self.rows()):
            if not row:
                continue
            poly = _format_tpoly(row)
            if n == 0:
                parts.append(poly)
            else:
                qpow = "q" if n == 1 else f"q^{n}"
                if poly == "1":
                    parts.append(qpow)
                elif len(row) == 1 and not poly.startswith("-"):
                    parts.append(f"{poly}*{qpow}")
                else:
                    parts.append(f"({poly})*{qpow}")
        return " + ".join(parts)

    # serialization

    def to_dict(self) -> dict:
        return {
            "q_order": self._order,
            "terms": [{"q": n, "t": d, "c": str(c)} for n, d, c in self.terms()],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: Mapping) -> BiSeries:
        return cls(int(data["q_order"]), {(int(r["q"]), int(r["t"])): int(r["c"]) for r in data["terms"]})

    @classmethod
    def from_json(cls, text: str) -> BiSeries:
        return cls.from_dict(json.loads(text))


def _format_tpoly(row: TPoly) -> str:
    out = []
    for d in sorted(row):
        c = row[d]
        if d == 0:
            mono = str(c)
        else:
            tp = "t" if d == 1 else f"t^{d}"
            mono = tp if c == 1 else f"-{tp}" if c == -1 else f"{c}*{tp}"
        out.append(mono)
    return " + ".join(out).replace("+ -", "- ")


def add(a: BiSeries, b: BiSeries) -> BiSeries:
    return a + b


def mul(a: BiSeries, b: BiSeries) -> BiSeries:
    return a * b


def geometric_inverse(a: BiSeries) -> BiSeries:
    """Inverse of a series whose q^0 part is exactly the constant 1.

    Solves ``b_0 = 1``, ``b_n = -sum_{k=1..n} a_k b_{n-k}`` on t-polynomials.
    """
    rows = a.rows()
    if rows[0] != {0: 1}:
        raise ValueError(f"constant term must be exactly 1, got {_format_tpoly(rows[0]) or '0'}")
    N = a.q_order
    inv: list[TPoly] = [{0: 1}]
    for n in range(1, N + 1):
        acc: Dict[int, int] = defaultdict(int)
        for k in range(1, n + 1):
            ak = rows[k]
            if not ak:
                continue
            for d1, c1 in ak.items():
                for d2, c2 in inv[n - k].items():
                    acc[d1 + d2] -= c1 * c2
        inv.append({d: c for d, c in acc.items() if c})
    return BiSeries.from_rows(N, inv)


def binomial_factor(sign: int, t_deg: int, q_deg: int, exponent: int, q_order: int) -> BiSeries:
    """Expand ``(1 - sign * t^t_deg * q^q_deg) ** exponent`` to order ``q_order``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if q_deg < 1:
        raise ValueError("q_deg must be positive")
    if t_deg < 0:
        raise ValueError("t_deg must be nonnegative")
    e = abs(exponent)
    terms = {}
    for j in range(min(e, q_order // q_deg) + 1):
        terms[(j * q_deg, j * t_deg)] = comb(e, j) * (-sign) ** j
    base = BiSeries(q_order, terms)
    return base if exponent >= 0 else geometric_inverse(base)


def specialize_t(a: BiSeries, t_value: int) -> BiSeries:
    out: Dict[Tuple[int, int], int] = defaultdict(int)
    for (n, d), c in a.coeffs.items():
        out[(n, 0)] += c * t_value**d
    return BiSeries(a.q_order, out)


def coefficient(a: BiSeries, n: int) -> TPoly:
    if not 0 <= n <= a.q_order:
        raise IndexError(f"q-degree {n} outside 0..{a.q_order}")
    return {d: c for (m, d), c in a.coeffs.items() if m == n}
