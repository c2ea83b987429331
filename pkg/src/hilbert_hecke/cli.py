"""Command line front end: ``hilbert-hecke <subcommand> ...``.

Output format comes from ``--json`` / ``--tsv`` / ``--pretty`` or, failing
that, the ``HILBERT_HECKE_FORMAT`` environment variable (default ``pretty``).
Exact integers and rationals are written as decimal strings in JSON.

Exit codes: 0 success, 1 a verification failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Callable, List, Optional, Sequence

from . import affine, fock, goettsche, hecke, mckay, verify
from .series import BiSeries

FORMAT_ENV = "HILBERT_HECKE_FORMAT"


class UsageError(Exception):
    pass


class VerificationFailed(Exception):
    def __init__(self, payload):
        super().__init__("verification failed")
        self.payload = payload


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")


def _add_format(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", dest="fmt", action="store_const", const="json")
    g.add_argument("--tsv", dest="fmt", action="store_const", const="tsv")
    g.add_argument("--pretty", dest="fmt", action="store_const", const="pretty")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hilbert-hecke", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("goettsche", help="Poincare polynomials of Hilb^n X")
    p.add_argument("--betti", type=_int_list, required=True, help="b0,b1,b2,b3,b4")
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--euler", action="store_true", help="specialize to t = -1")
    _add_format(p)

    p = sub.add_parser("orbifold", help="orbifold Euler number of S^n X by brute force")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--euler-number", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("fock", help="Fock space character and operator relations")
    p.add_argument("--betti", type=_int_list, required=True)
    p.add_argument("--order", type=int, default=6)
    p.add_argument("--check-relations", action="store_true")
    p.add_argument("--max-weight", type=int, default=4)
    p.add_argument("--max-index", type=int, default=4)
    p.add_argument("--ci", default="default", help="'default' (c_i = i) or c_1,c_2,... explicitly")
    _add_format(p)

    p = sub.add_parser("affine", help="affine ADE highest-weight characters")
    p.add_argument("--type", required=True, help="A1, A2, D4, E6, ...")
    p.add_argument("--weight", type=_int_list, required=True, help="w_0,...,w_n")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--algo", choices=("freudenthal", "weyl-kac", "both"), default="both")
    _add_format(p)

    p = sub.add_parser("mckay", help="McKay graph of a finite subgroup of SU(2)")
    p.add_argument("--group", required=True, help="cyclic-5, binary-dihedral-3, binary-tetrahedral, ...")
    _add_format(p)

    p = sub.add_parser("hecke", help="Hecke operator T(p) on a q-expansion")
    p.add_argument("--form", choices=("delta", "eisenstein"), required=True)
    p.add_argument("--weight", type=int, default=None)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--terms", type=int, default=60)
    _add_format(p)

    p = sub.add_parser("eta-check", help="numeric check of eta(-1/tau) = sqrt(-i tau) eta(tau)")
    p.add_argument("--tau", type=_complex, action="append", help="repeatable; default is a fixed 10-point set")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--terms", type=int, default=None)
    _add_format(p)

    p = sub.add_parser("verify", help="run the cross-check suite")
    p.add_argument("--suite", default="all", choices=("all",) + tuple(verify.SUITES))
    p.add_argument("--fast", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    _add_format(p)
    return parser


# command handlers return a JSON-ready payload plus tsv rows and a pretty string


def _series_payload(s: BiSeries):
    rows = [("q", "t", "c")] + [(n, d, c) for n, d, c in s.terms()]
    return s.to_dict(), rows, str(s)


def cmd_goettsche(args):
    try:
        topo = goettsche.SurfaceTopology(args.betti)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    s = goettsche.euler_series(topo, args.order) if args.euler else goettsche.goettsche_series(topo, args.order)
    return _series_payload(s)


def cmd_orbifold(args):
    if not 1 <= args.n <= goettsche.ORBIFOLD_MAX_N:
        raise UsageError(f"--n must lie in 1..{goettsche.ORBIFOLD_MAX_N}")
    value = goettsche.orbifold_euler_bruteforce(args.n, args.euler_number)
    payload = {"n": args.n, "euler_number": args.euler_number, "orbifold_euler": str(value)}
    return payload, [("n", "e", "value"), (args.n, args.euler_number, value)], str(value)


def _constants(text: str) -> fock.CommutatorConstants:
    if text == "default":
        return fock.CommutatorConstants()
    values = _int_list(text)
    if any(v == 0 for v in values):
        raise UsageError("all c_i must be nonzero")

    def c(i: int) -> int:
        if i > len(values):
            raise UsageError(f"--ci gives only {len(values)} constants, c_{i} needed")
        return values[i - 1]

    return fock.CommutatorConstants(c)


def cmd_fock(args):
    try:
        topo = goettsche.SurfaceTopology(args.betti)
    except ValueError as exc:
        raise UsageError(str(exc))
    spec = fock.ColorSpec.from_topology(topo)
    chi = fock.graded_character(spec, args.order)
    payload = {
        "betti": list(topo.betti),
        "character": chi.to_dict(),
        "matches_goettsche": chi == goettsche.goettsche_series(topo, args.order),
    }
    pretty = [f"character: {chi}", f"equals Goettsche series: {payload['matches_goettsche']}"]
    rows = [("q", "t", "c")] + list(chi.terms())
    if args.check_relations:
        report = fock.check_relations(spec, args.max_weight, args.max_index, _constants(args.ci))
        payload["relations"] = {"checked": report.checked, "failures": report.failures[:20], "ok": report.ok}
        pretty.append(f"relations: {report.checked} checked, {len(report.failures)} failures")
        if not report.ok:
            raise VerificationFailed(payload)
    if not payload["matches_goettsche"]:
        raise VerificationFailed(payload)
    return payload, rows, "\n".join(pretty)


def cmd_affine(args):
    try:
        alg = affine.build_algebra(args.type)
        lev = affine.level(alg, args.weight)
    except ValueError as exc:
        raise UsageError(str(exc))
    if lev < 1:
        raise UsageError("the highest weight must have positive level")
    if args.depth < 0:
        raise UsageError("--depth must be nonnegative")
    tables = {}
    try:
        if args.algo in ("freudenthal", "both"):
            tables["freudenthal"] = affine.freudenthal_multiplicities(alg, args.weight, args.depth)
        if args.algo in ("weyl-kac", "both"):
            tables["weyl_kac"] = affine.weyl_kac_character(alg, args.weight, args.depth)
    except ValueError as exc:
        raise UsageError(str(exc))
    first = next(iter(tables.values()))
    payload = {
        "type": alg.label,
        "marks": list(alg.marks),
        "weight": list(args.weight),
        "level": lev,
        "tables": {k: t.to_dict() for k, t in tables.items()},
        "q_series": affine.character_q_series(first).to_dict(),
    }
    pretty = [f"{alg.label} level {lev}, {len(first)} weights to depth {args.depth}",
              f"q-series: {affine.character_q_series(first)}"]
    if len(tables) == 2:
        equal = tables["freudenthal"] == tables["weyl_kac"]
        payload["verdict"] = "equal" if equal else "different"
        pretty.append(f"verdict: {payload['verdict']}")
        if not equal:
            raise VerificationFailed(payload)
    rows = [("algo", "c", "mult")] + [
        (k, ",".join(map(str, c)), m) for k, t in tables.items() for c, m in sorted(t.mults.items())
    ]
    return payload, rows, "\n".join(pretty)


def cmd_mckay(args):
    try:
        spec = mckay.GroupSpec.parse(args.group)
    except ValueError as exc:
        raise UsageError(str(exc))
    payload = mckay.mckay_correspondence(spec)
    rows = [("key", "value")] + [(k, json.dumps(v)) for k, v in payload.items()]
    pretty = "\n".join(f"{k}: {v}" for k, v in payload.items())
    if not (payload["cartan_match"] and payload["marks_match"]):
        raise VerificationFailed(payload)
    return payload, rows, pretty


def cmd_hecke(args):
    try:
        if args.form == "delta":
            if args.weight not in (None, 12):
                raise UsageError("delta has weight 12")
            f = hecke.delta(args.terms)
        else:
            if args.weight is None:
                raise UsageError("--weight is required for eisenstein")
            f = hecke.eisenstein(args.weight, args.terms)
        g = hecke.hecke_T(args.prime, f)
        lam = hecke.is_eigenform(f, args.prime)
    except ValueError as exc:
        raise UsageError(str(exc))
    payload = {
        "form": f.to_dict(),
        "prime": args.prime,
        "image": g.to_dict(),
        "eigenvalue": None if lam is None else str(lam),
    }
    rows = [("n", "a_n", "Tp_a_n")] + [
        (n, str(f[n]), str(g[n]) if n <= g.q_order else "") for n in range(f.q_order + 1)
    ]
    pretty = f"T({args.prime}) eigenvalue: {lam}\nimage: {[str(c) for c in g.coeffs]}"
    return payload, rows, pretty


def cmd_eta(args):
    taus = args.tau or verify.ETA_SAMPLES
    try:
        report = hecke.eta_modularity_check(taus, args.tol, args.terms)
    except ValueError as exc:
        raise UsageError(str(exc))
    payload = report.to_dict()
    rows = [("tau", "deviation", "terms")] + [
        (str(t), f"{d:.3e}", f"{m[0]},{m[1]}") for t, d, m in zip(report.taus, report.deviations, report.terms)
    ]
    pretty = f"max deviation {report.max_deviation:.3e} (tolerance {args.tol:g}): {'ok' if report.ok else 'FAILED'}"
    if not report.ok:
        raise VerificationFailed(payload)
    return payload, rows, pretty


def cmd_verify(args):
    results = verify.run_suite(args.suite, fast=args.fast, seed=args.seed)
    payload = {"suite": args.suite, "seed": args.seed, "results": [r.to_dict() for r in results],
               "passed": all(r.passed for r in results)}
    rows = [("check", "passed", "seconds", "detail")] + [
        (r.name, r.passed, f"{r.seconds:.2f}", r.detail) for r in results
    ]
    pretty = "\n".join(f"[{'PASS' if r.passed else 'FAIL'}] {r.name} ({r.seconds:.1f}s): {r.detail}" for r in results)
    if not payload["passed"]:
        raise VerificationFailed(payload)
    return payload, rows, pretty


HANDLERS: dict[str, Callable] = {
    "goettsche": cmd_goettsche,
    "orbifold": cmd_orbifold,
    "fock": cmd_fock,
    "affine": cmd_affine,
    "mckay": cmd_mckay,
    "hecke": cmd_hecke,
    "eta-check": cmd_eta,
    "verify": cmd_verify,
}


def _emit(fmt: str, payload, rows, pretty, stream) -> None:
    if fmt == "json":
        json.dump(payload, stream, indent=2, default=str)
        stream.write("\n")
    elif fmt == "tsv":
        for row in rows:
            stream.write("\t".join(str(x) for x in row) + "\n")
    else:
        stream.write(pretty + "\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.fmt or os.environ.get(FORMAT_ENV, "pretty")
    if fmt not in ("json", "tsv", "pretty"):
        fmt = "pretty"
    try:
        payload, rows, pretty = HANDLERS[args.command](args)
    except UsageError as exc:
        json.dump({"error": "invalid parameters", "command": args.command, "message": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 2
    except VerificationFailed as exc:
        _emit(fmt, exc.payload, [("error",), ("verification failed",)], "verification FAILED", sys.stdout)
        json.dump({"error": "verification failed", "command": args.command}, sys.stderr)
        sys.stderr.write("\n")
        return 1
    _emit(fmt, payload, rows, pretty, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
