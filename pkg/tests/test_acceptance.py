"""The nine acceptance criteria, each at its stated tolerance and time limit.

Every test prints one PASS/FAIL line; the lines are repeated in a summary
section at the end of the pytest run.
"""

import random
import time

import numpy as np

from hilbert_hecke import affine, fock, goettsche, hecke, mckay
from oracles import partitions

MIXED_BETTI = (1, 2, 1, 2, 1)
CHARACTER_BETTI = [(1, 0, 0, 0, 0), (1, 0, 1, 0, 1), (1, 0, 2, 0, 1), (1, 1, 0, 1, 1), (1, 2, 1, 2, 1),
                   (0, 1, 0, 0, 0)]
MCKAY_GROUPS = (
    [mckay.GroupSpec("cyclic", k) for k in range(2, 9)]
    + [mckay.GroupSpec("binary_dihedral", k) for k in range(2, 7)]
    + [mckay.GroupSpec(f) for f in ("binary_tetrahedral", "binary_octahedral", "binary_icosahedral")]
)
ETA_TAUS = [0.5j, 1j, 2j, 0.5 + 0.5j, 0.3 + 1.1j, -0.4 + 0.7j, 1.7 + 0.5j, -2.5 + 1.5j, 0.25 + 0.6j, 0.9 + 0.9j]


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t0


def _finish(log, label, ok, detail, seconds, limit):
    passed = ok and seconds < limit
    log(label, passed, detail, seconds, limit)
    assert ok, detail
    assert seconds < limit, f"{label} took {seconds:.2f}s, limit {limit}s"


def test_1_goettsche_vs_partitions(acceptance_log):
    topo = goettsche.SurfaceTopology((1, 0, 0, 0, 0))
    bad = []
    with Timer() as t:
        series = goettsche.goettsche_series(topo, 12)
        for n in range(13):
            oracle = {}
            for lam in partitions(n):
                d = 2 * (n - len(lam))
                oracle[d] = oracle.get(d, 0) + 1
            got = {d: c for (m, d), c in series.coeffs.items() if m == n}
            if got != oracle:
                bad.append(n)
    _finish(acceptance_log, "1 Goettsche vs partition oracle", not bad,
            f"n <= 12 exact, mismatches at {bad}", t.seconds, 1)


def test_2_hirzebruch_hofer(acceptance_log):
    bad = []
    with Timer() as t:
        for e in (1, 2, 3, 4):
            series = goettsche.euler_series(goettsche.SurfaceTopology((1, 0, e - 2, 0, 1)) if e >= 2
                                            else goettsche.SurfaceTopology((1, 0, 0, 0, 0)), 6)
            for n in range(1, 7):
                if goettsche.orbifold_euler_bruteforce(n, e) != series[(n, 0)]:
                    bad.append((n, e))
    _finish(acceptance_log, "2 Hirzebruch-Hofer identity", not bad,
            f"n <= 6, e in 1..4, mismatches {bad}", t.seconds, 30)


def test_3_fock_relations(acceptance_log):
    spec = fock.ColorSpec.from_topology(goettsche.SurfaceTopology(MIXED_BETTI))
    with Timer() as t:
        report = fock.check_relations(spec, 6, 4)
    _finish(acceptance_log, "3 Fock (anti)commutation relations", report.ok,
            f"{report.checked} instances on weight <= 6, i,j <= 4, betti {MIXED_BETTI}, "
            f"{len(report.failures)} failures", t.seconds, 60)


def test_4_character_equals_goettsche(acceptance_log):
    bad = []
    with Timer() as t:
        for betti in CHARACTER_BETTI:
            topo = goettsche.SurfaceTopology(betti)
            chi = fock.graded_character(fock.ColorSpec.from_topology(topo), 8)
            if chi != goettsche.goettsche_series(topo, 8):
                bad.append(betti)
    _finish(acceptance_log, "4 Fock character = Goettsche series", not bad,
            f"{len(CHARACTER_BETTI)} Betti vectors to order 8, mismatches {bad}", t.seconds, 60)


def test_5_mckay(acceptance_log):
    bad = []
    with Timer() as t:
        for spec in MCKAY_GROUPS:
            r = mckay.mckay_correspondence(spec)
            if not (r["cartan_match"] and r["marks_match"] and r["sum_dims_squared"] == r["order"]):
                bad.append(spec.name)
    _finish(acceptance_log, "5 McKay correspondence", not bad,
            f"{len(MCKAY_GROUPS)} groups, failures {bad}", t.seconds, 60)


def _dominant_weights(alg, lev):
    out = []

    def rec(k, rest, w):
        if k == alg.size:
            if rest == 0:
                out.append(tuple(w))
            return
        for x in range(rest // alg.marks[k] + 1):
            rec(k + 1, rest - x * alg.marks[k], w + [x])

    rec(0, lev, [])
    return out


def test_6_dual_algorithm_characters(acceptance_log):
    cases = [("A1", 1), ("A1", 2), ("A2", 1), ("D4", 1)]
    bad, count = [], 0
    with Timer() as t:
        for label, lev in cases:
            alg = affine.build_algebra(label)
            for w in _dominant_weights(alg, lev):
                count += 1
                if affine.freudenthal_multiplicities(alg, w, 6) != affine.weyl_kac_character(alg, w, 6):
                    bad.append((label, w))
    _finish(acceptance_log, "6 Freudenthal = Weyl-Kac", not bad,
            f"{count} highest weights at depth 6, mismatches {bad}", t.seconds, 120)


def test_7_level_is_rank(acceptance_log):
    rng = random.Random(7)
    bad, count = [], 0
    with Timer() as t:
        for spec in MCKAY_GROUPS:
            data = mckay.group_data(spec)
            match = mckay.match_ade(mckay.mckay_graph(data))
            alg = affine.build_algebra(match.label)
            for _ in range(20):
                w = [rng.randint(0, 9) for _ in range(alg.size)]
                count += 1
                via_dims = sum(data.dims[match.perm[k]] * w[k] for k in range(alg.size))
                if affine.level(alg, w) != via_dims:
                    bad.append((match.label, w))
    _finish(acceptance_log, "7 level = sum of dims", not bad,
            f"{count} random weights over {len(MCKAY_GROUPS)} McKay types, mismatches {bad[:3]}",
            t.seconds, float("inf"))


def test_8_hecke_suite(acceptance_log):
    problems = []
    with Timer() as t:
        D = hecke.delta(7 * 60)
        for p in (2, 3, 5, 7):
            if hecke.is_eigenform(D, p) != D[p]:
                problems.append(f"Delta not a T({p}) eigenform with eigenvalue a_{p}")
        a = D.coeffs
        for p in (2, 3, 5, 7):
            if a[p * p] != a[p] ** 2 - p**11:
                problems.append(f"a_{p * p} recursion")
        for m in range(2, 61):
            for n in range(2, 60 // m + 1):
                if np.gcd(m, n) == 1 and a[m * n] != a[m] * a[n]:
                    problems.append(f"a_{m * n} multiplicativity")
        for f in (hecke.eisenstein(4, 60) ** 3, D.truncate(60)):
            if not hecke.commute_check(2, 3, f):
                problems.append("T(2)T(3) != T(3)T(2)")
        for k in hecke.EISENSTEIN_WEIGHTS:
            E = hecke.eisenstein(k, 60)
            for p in (2, 3, 5, 7):
                if hecke.is_eigenform(E, p) != 1 + p ** (k - 1):
                    problems.append(f"E_{k} eigenvalue at {p}")
    _finish(acceptance_log, "8 Hecke suite", not problems,
            f"Delta, E_4^3, E_k; problems {problems[:3]}", t.seconds, 10)


def test_9_eta_modularity(acceptance_log):
    assert len(ETA_TAUS) == 10 and all(z.imag >= 0.5 for z in ETA_TAUS)
    with Timer() as t:
        report = hecke.eta_modularity_check(ETA_TAUS, 1e-8)
    _finish(acceptance_log, "9 eta modularity", report.ok,
            f"max deviation {report.max_deviation:.2e} over 10 points, tolerance 1e-8", t.seconds, 5)
