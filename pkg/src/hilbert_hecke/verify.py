"""Cross-checks between independent routes, bundled for the ``verify`` command."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Tuple

from . import affine, fock, goettsche, hecke, mckay
from .series import BiSeries, geometric_inverse

__all__ = ["CheckResult", "SUITES", "run_suite"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail, "seconds": round(self.seconds, 3)}


def _partitions(n: int, largest: int | None = None) -> Iterator[Tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def check_goettsche_partitions(fast: bool, rng: random.Random) -> Tuple[bool, str]:
    topo = goettsche.SurfaceTopology((1, 0, 0, 0, 0))
    top = 8 if fast else 12
    series = goettsche.goettsche_series(topo, top)
    for n in range(top + 1):
        oracle: Dict[int, int] = {}
        for lam in _partitions(n):
            d = 2 * (n - len(lam))
            oracle[d] = oracle.get(d, 0) + 1
        got = {d: c for (m, d), c in series.coeffs.items() if m == n}
        if got != oracle:
            return False, f"n={n}: {got} != {oracle}"
    return True, f"n <= {top}"


def check_hirzebruch_hofer(fast: bool, rng: random.Random) -> Tuple[bool, str]:
    top = 5 if fast else 6
    for e in (1, 2, 3, 4):
        topo = goettsche.SurfaceTopology((1, 0, e - 2, 0, 1)) if e >= 2 else goettsche.SurfaceTopology((1, 0, 0, 0, 0))
        series = goettsche.euler_series(topo, top)
        for n in range(1, top + 1):
            brute = goettsche.orbifold_euler_bruteforce(n, e)
            if brute != series[(n, 0)]:
                return False, f"n={n}, e={e}: {brute} != {series[(n, 0)]}"
    return True, f"n <= {top}, e in 1..4"


def check_euler_paths(fast: bool, rng: random.Random) -> Tuple[bool, str]:
    for _ in range(5):
        betti = [rng.randint(0, 3) for _ in range(5)]
        topo = goettsche.SurfaceTopology(betti)
        a = goettsche.euler_series(topo, 8)
        b = goettsche.euler_series_direct(topo.euler(), 8)
        if a != b:
            return False, f"betti {betti}: {a} != {b}"
    return True, "5 random Betti vectors"


def check_fock_relations(fast: bool, rng: random.Random) -> Tuple[bool, str]:
    spec = fock.ColorSpec.from_topology(goettsche.SurfaceTopology((1, 2, 1, 2, 1)))
    weight = 3 if fast else 6
    report = fock.check_relations(spec, weight, 4)
    return report.ok, f"{report.checked} relation instances, {len(report.failures)} failures"


FOCK_BETTI = [(1, 0, 0, 0, 0), (1, 0, 1, 0, 1), (1, 0, 2, 0, 1), (1, 1, 0, 1, 1), (1, 2, 1, 2, 1), (0, 1, 0, 0, 0)]


def check_fock_character(fast: bool, rng: random.Random) -> Tuple[bool, str]:
    order = 6 if fast else 8
    for betti in FOCK_BETTI:
        topo = goettsche.SurfaceTopology(betti)
        chi = fock.graded_character(fock.ColorSpec.from_topology(topo), order)
        if chi != goettsche.goettsche_series(topo, order):
            return False, f"betti {betti} differs"
    return True, f"{len(FOCK_BETTI)} Betti vectors to order {order}"


def mckay_specs() -> List[mckay.GroupSpec]:
    return (
        [mckay.GroupSpec("cyclic", k) for k in range(2, 9)]
        + [mckay.GroupSpec("binary_dihedral", k) for k in range(2, 7)]
        + [mckay.GroupSpec(f) for f in ("binary_tetrahedral", "binary_octahedral", "binary_icosahedral")]
    )


def check_mckay(fast: bool, rng: random.Random) -> Tuple[bool, str]:
    for spec in mckay_specs():
        r = mckay.mckay_correspondence(spec)
        if not (r["cartan_match"] and r["marks_match"] and r["sum_dims_squared"] == r["order"]):
            return False, f"{spec.name}: {r}"
    return True, f"{len(mckay_specs())} groups"


AFFINE_CASES = [("A1", (1, 0)), ("A1", (0, 1)), ("A1", (2, 0)), ("A1", (1, 1)), ("A2", (1, 0, 0)), ("D4", (1, 0, 0, 0, 0))]


def check_affine_dual(fast: bool, rng: random.Random) -> Tuple[bool, str]:
    for label, w in AFFINE_CASES:
        depth = 4 if fast and label == "D4" else 6
        alg = affine.build_algebra(label)
        a = affine.freudenthal_multiplicities(alg, w, depth)
        b = affine.weyl_kac_character(alg, w, depth)
        if a != b:
            return False, f"{label} {w} depth {depth}: tables differ"
    return True, f"{len(AFFINE_CASES)} highest weights"


def check_level_formula(fast: bool, rng: random.Random) -> Tuple[bool, str]:
    groups = {"A2": mckay.GroupSpec("cyclic", 3), "D4": mckay.GroupSpec("binary_dihedral", 2),
              "E6": mckay.GroupSpec("binary_tetrahedral"), "E8": mckay.GroupSpec("binary_icosahedral")}
    for label, spec in groups.items():
        data = mckay.group_data(spec)
        match = mckay.match_ade(mckay.mckay_graph(data))
        alg = affine.build_algebra(label)
        if match.label != label:
            return False, f"{spec.name} matched {match.label}, expected {label}"
        for _ in range(10):
            w = [rng.randint(0, 5) for _ in range(alg.size)]
            rank = sum(data.dims[match.perm[k]] * w[k] for k in range(alg.size))
            if affine.level(alg, w) != rank:
                return False, f"{label} w={w}: level {affine.level(alg, w)} != {rank}"
    return True, "40 random weights over 4 types"


def check_hecke(fast: bool, rng: random.Random) -> Tuple[bool, str]:
    N = 60 * 7
    D = hecke.delta(N)
    for p in (2, 3, 5, 7):
        lam = hecke.is_eigenform(D, p)
        if lam != D[p]:
            return False, f"Delta: T({p}) eigenvalue {lam} != a_{p} = {D[p]}"
    for p in (2, 3, 5, 7):
        rep = hecke.euler_product_check(D.truncate(60), p)
        if not rep.ok:
            return False, rep.failures[0]
    E43 = hecke.eisenstein(4, N) ** 3
    for f in (D, E43):
        if not hecke.commute_check(2, 3, f):
            return False, "T(2)T(3) != T(3)T(2)"
    for k in hecke.EISENSTEIN_WEIGHTS:
        E = hecke.eisenstein(k, 150)
        for p in (2, 3, 5):
            if hecke.is_eigenform(E, p) != 1 + p ** (k - 1):
                return False, f"E_{k} at p={p}"
    return True, "Delta, E_4^3 and E_k checks"


ETA_SAMPLES = [1j, 2j, 0.5j + 0.5, 0.3 + 1.1j, -0.4 + 0.7j, 1.7 + 0.5j, 0.1 + 3j, -2.5 + 1.5j, 0.25 + 0.5j, 0.9 + 0.9j]


def check_eta(fast: bool, rng: random.Random) -> Tuple[bool, str]:
    report = hecke.eta_modularity_check(ETA_SAMPLES, 1e-8)
    return report.ok, f"max deviation {report.max_deviation:.2e}"


def check_series_ring(fast: bool, rng: random.Random) -> Tuple[bool, str]:
    def rand(order):
        terms = {(rng.randint(0, order), rng.randint(0, 4)): rng.randint(-5, 5) for _ in range(6)}
        return BiSeries(order, terms)

    for _ in range(20):
        a, b, c = rand(6), rand(6), rand(6)
        if (a * b) * c != a * (b * c) or a * (b + c) != a * b + a * c:
            return False, "ring axiom failed"
        unit = BiSeries.one(6) + BiSeries(6, {k: v for k, v in a.coeffs.items() if k[0] > 0})
        if geometric_inverse(unit) * unit != BiSeries.one(6):
            return False, "inverse round trip failed"
    return True, "20 random triples"


SUITES: Dict[str, List[Tuple[str, Callable]]] = {
    "series": [("series ring axioms", check_series_ring)],
    "goettsche": [
        ("goettsche vs partitions", check_goettsche_partitions),
        ("hirzebruch-hofer", check_hirzebruch_hofer),
        ("euler specialization", check_euler_paths),
    ],
    "fock": [("fock relations", check_fock_relations), ("fock character", check_fock_character)],
    "mckay": [("mckay correspondence", check_mckay)],
    "affine": [("freudenthal vs weyl-kac", check_affine_dual), ("level = rank", check_level_formula)],
    "hecke": [("hecke suite", check_hecke), ("eta modularity", check_eta)],
}


def run_suite(name: str = "all", fast: bool = False, seed: int = 0) -> List[CheckResult]:
    if name != "all" and name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    rng = random.Random(seed)
    chosen = [c for s, checks in SUITES.items() if name in ("all", s) for c in checks]
    results = []
    for label, fn in chosen:
        t0 = time.perf_counter()
        try:
            ok, detail = fn(fast, rng)
        except Exception as exc:  # a crashing check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(label, ok, detail, time.perf_counter() - t0))
    return results
