"""Hecke operators on q-expansions of level-one modular forms.

On lattice functions of weight ``k``, ``T(p)`` sums over the index-``p``
sublattices with the factor ``p^(k-1)``.  On q-expansions this becomes the
classical rule

    a_n(T(p) f) = a_{np}(f) + p^(k-1) a_{n/p}(f)      (second term only if p | n)

(see e.g. Serre, *A Course in Arithmetic*, VII.5.3), and that rule is what is
implemented here.  ``T(p) f`` is known to order ``floor(N / p)`` when ``f`` is
known to order ``N``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

__all__ = [
    "QExpansion",
    "WeightMismatch",
    "bernoulli",
    "sigma",
    "eisenstein",
    "delta",
    "hecke_T",
    "is_eigenform",
    "euler_product_check",
    "commute_check",
    "eta",
    "eta_modularity_check",
    "EulerProductReport",
    "EtaReport",
]

EISENSTEIN_WEIGHTS = (4, 6, 8, 10, 14)


class WeightMismatch(ValueError):
    pass


@dataclass(frozen=True)
class QExpansion:
    weight: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.weight <= 0 or self.weight % 2:
            raise ValueError(f"weight must be even and positive, got {self.weight}")
        if not self.coeffs:
            raise ValueError("need at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def q_order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def truncate(self, order: int) -> QExpansion:
        if order > self.q_order:
            raise ValueError(f"cannot extend order {self.q_order} to {order}")
        return QExpansion(self.weight, self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _pair(self, other: QExpansion) -> int:
        if self.weight != other.weight:
            raise WeightMismatch(f"weight {self.weight} vs {other.weight}")
        return min(self.q_order, other.q_order)

    def __add__(self, other: QExpansion) -> QExpansion:
        N = self._pair(other)
        return QExpansion(self.weight, [a + b for a, b in zip(self.coeffs[: N + 1], other.coeffs)])

    def __sub__(self, other: QExpansion) -> QExpansion:
        return self + other.scale(-1)

    def scale(self, c) -> QExpansion:
        return QExpansion(self.weight, [c * a for a in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, QExpansion):
            return self.scale(other)
        N = min(self.q_order, other.q_order)
        out = [Fraction(0)] * (N + 1)
        for i, a in enumerate(self.coeffs[: N + 1]):
            if a:
                for j, b in enumerate(other.coeffs[: N + 1 - i]):
                    out[i + j] += a * b
        return QExpansion(self.weight + other.weight, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> QExpansion:
        if e < 1:
            raise ValueError("only positive powers")
        out = self
        for _ in range(e - 1):
            out = out * self
        return out

    def to_dict(self) -> dict:
        return {"weight": self.weight, "q_order": self.q_order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_dict(cls, data) -> QExpansion:
        return cls(int(data["weight"]), [Fraction(c) for c in data["coeffs"]])


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number ``B_n`` with ``B_1 = -1/2``."""
    B = [Fraction(1)]
    for m in range(1, n + 1):
        B.append(-sum(math.comb(m + 1, j) * B[j] for j in range(m)) / (m + 1))
    return B[n]


def sigma(n: int, r: int) -> int:
    return sum(d**r for d in range(1, n + 1) if n % d == 0)


def _divisor_power_sums(N: int, r: int) -> List[int]:
    out = [0] * (N + 1)
    for d in range(1, N + 1):
        dr = d**r
        for m in range(d, N + 1, d):
            out[m] += dr
    return out


def eisenstein(k: int, N: int) -> QExpansion:
    """``E_k = 1 - (2k / B_k) sum_n sigma_{k-1}(n) q^n``."""
    if k not in EISENSTEIN_WEIGHTS:
        raise ValueError(f"E_{k} not supported; weights with one-dimensional spaces are {EISENSTEIN_WEIGHTS}")
    if N < 0:
        raise ValueError("order must be nonnegative")
    factor = -Fraction(2 * k) / bernoulli(k)
    sig = _divisor_power_sums(N, k - 1)
    return QExpansion(k, [Fraction(1)] + [factor * sig[n] for n in range(1, N + 1)])


def delta(N: int) -> QExpansion:
    """``q prod_{n>=1} (1 - q^n)^24`` to order ``N``."""
    if N < 1:
        raise ValueError("order must be at least 1")
    # prod (1 - q^n)^24 to order N - 1, then shift by q
    M = N - 1
    a = [0] * (M + 1)
    a[0] = 1
    for n in range(1, M + 1):
        for _ in range(24):
            for j in range(M, n - 1, -1):
                a[j] -= a[j - n]
    return QExpansion(12, [Fraction(0)] + [Fraction(x) for x in a])


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def hecke_T(p: int, f: QExpansion) -> QExpansion:
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    M = f.q_order // p
    pk = p ** (f.weight - 1)
    out = []
    for n in range(M + 1):
        a = f.coeffs[n * p]
        if n % p == 0:
            a += pk * f.coeffs[n // p]
        out.append(a)
    return QExpansion(f.weight, out)


def is_eigenform(f: QExpansion, p: int) -> Optional[Fraction]:
    """Eigenvalue of ``T(p)`` on ``f`` if the truncated expansions agree, else ``None``."""
    g = hecke_T(p, f)
    M = g.q_order
    lead = next((n for n in range(M + 1) if f.coeffs[n]), None)
    if M < 1 or lead is None:
        raise ValueError(f"order {f.q_order} too short to decide T({p})-eigenform status")
    lam = g.coeffs[lead] / f.coeffs[lead]
    if all(g.coeffs[n] == lam * f.coeffs[n] for n in range(M + 1)):
        return lam
    return None


@dataclass
class EulerProductReport:
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def euler_product_check(f: QExpansion, p: int, bound: Optional[int] = None) -> EulerProductReport:
    """Prime-power recursion at ``p`` and coprime multiplicativity up to ``bound``.

    Checks ``a_{p^(r+1)} = a_p a_{p^r} - p^(k-1) a_{p^(r-1)}`` and
    ``a_{mn} = a_m a_n`` for ``gcd(m, n) = 1`` with ``mn <= bound``.
    """
    if f.coeffs[1] != 1:
        raise ValueError("euler_product_check needs a normalized form with a_1 = 1")
    bound = f.q_order if bound is None else min(bound, f.q_order)
    a, k = f.coeffs, f.weight
    report = EulerProductReport()
    r = 1
    while p ** (r + 1) <= bound:
        lhs = a[p ** (r + 1)]
        rhs = a[p] * a[p**r] - p ** (k - 1) * a[p ** (r - 1)]
        report.checked += 1
        if lhs != rhs:
            report.failures.append(f"a_{p ** (r + 1)} = {lhs} but recursion gives {rhs}")
        r += 1
    for m in range(2, bound + 1):
        for n in range(m + 1, bound // m + 1):
            if math.gcd(m, n) == 1:
                report.checked += 1
                if a[m * n] != a[m] * a[n]:
                    report.failures.append(f"a_{m * n} = {a[m * n]} != a_{m} a_{n} = {a[m] * a[n]}")
    return report


def commute_check(p: int, q: int, f: QExpansion) -> bool:
    if p == q:
        raise ValueError("need two distinct primes")
    if f.q_order < p * q:
        raise ValueError(f"order {f.q_order} is below p*q = {p * q}")
    return hecke_T(p, hecke_T(q, f)) == hecke_T(q, hecke_T(p, f))


# Dedekind eta, numerically


def _eta_tail_bound(abs_q: float, M: int) -> float:
    """Bound on ``|prod_{n>M} (1 - q^n) - 1|``."""
    if abs_q >= 1:
        return math.inf
    x = abs_q ** (M + 1) / ((1 - abs_q) * (1 - abs_q ** (M + 1)))
    return math.expm1(x)


def _eta_terms_needed(tau: complex, tol: float) -> int:
    abs_q = math.exp(-2 * math.pi * tau.imag)
    M = 1
    while _eta_tail_bound(abs_q, M) > tol:
        M *= 2
    lo, hi = M // 2, M
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if _eta_tail_bound(abs_q, mid) > tol:
            lo = mid
        else:
            hi = mid
    return hi


def eta(tau: complex, terms: int) -> complex:
    """``q^(1/24) prod_{n=1}^{terms} (1 - q^n)`` with ``q = exp(2 pi i tau)``."""
    if tau.imag <= 0:
        raise ValueError("tau must lie in the upper half plane")
    q = cmath.exp(2j * math.pi * tau)
    prod = 1 + 0j
    qn = 1 + 0j
    for _ in range(terms):
        qn *= q
        prod *= 1 - qn
    return cmath.exp(2j * math.pi * tau / 24) * prod


@dataclass
class EtaReport:
    taus: List[complex]
    deviations: List[float]
    terms: List[Tuple[int, int]]
    tolerance: float

    @property
    def max_deviation(self) -> float:
        return max(self.deviations) if self.deviations else 0.0

    @property
    def ok(self) -> bool:
        return self.max_deviation < self.tolerance

    def to_dict(self) -> dict:
        return {
            "tolerance": self.tolerance,
            "max_deviation": self.max_deviation,
            "passed": self.ok,
            "samples": [
                {"tau": [t.real, t.imag], "deviation": d, "terms": list(m)}
                for t, d, m in zip(self.taus, self.deviations, self.terms)
            ],
        }


def eta_modularity_check(taus: Sequence[complex], tol: float = 1e-8, terms: Optional[int] = None) -> EtaReport:
    """Compare ``eta(-1/tau)`` with ``sqrt(-i tau) eta(tau)`` at each sample.

    The product is truncated where the tail bound drops below ``tol / 100``
    (both sides separately).  A fixed ``terms`` is accepted only if it meets
    that bound.
    """
    devs, used = [], []
    taus = [complex(t) for t in taus]
    for tau in taus:
        if tau.imag <= 0:
            raise ValueError(f"tau = {tau} is not in the upper half plane")
        image = -1 / tau
        need = (_eta_terms_needed(tau, tol / 100), _eta_terms_needed(image, tol / 100))
        if terms is not None:
            if terms < max(need):
                raise ValueError(f"{terms} terms leave a tail above tolerance at tau = {tau}; need {max(need)}")
            need = (terms, terms)
        lhs = eta(image, need[1])
        rhs = cmath.sqrt(-1j * tau) * eta(tau, need[0])
        devs.append(abs(lhs - rhs))
        used.append(need)
    return EtaReport(taus, devs, used, tol)
