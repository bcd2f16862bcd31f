"""Command-line front end: classification, verification suites, the (2,2,2) potential,
and the machine-readable coefficient report.

Exit codes: 0 = pass, 1 = identity failure, 2 = usage or input error.  JSON goes to
stdout under --json (schema "cusp-hierarchy/1"); diagnostics go to stderr.  Rationals
serialize as "p/q" strings and cyclotomic numbers as {order, coeffs}.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import gw222
from .cocycle import epsilon, kappa as cocycle_kappa, sf, upsilon, zeta_relation_holds
from .exactnum import CycloNumber, product_one_minus_eta
from .hqe import (b_coefficient_match, commutator_identity, constant_term_identity,
                  hqe_report, sum_a_alpha)
from .kgamma import (GAMMA_REFERENCE_VALUES, euler_gram_determinant, euler_pairing,
                     k_generator, k_unit, symmetrized_euler)
from .milnor import (MilnorSystem, RootVector, affine_kernel_check, alpha_root,
                     build_root_system, coxeter_sigma, fundamental_weights,
                     sigma_inverse_entries)
from .orbifold import NotFanoError
from .periods import (calibrated_period, check_period_odes, laplace_match,
                      monodromy_matches_continuation, saito_pairing)

SCHEMA = "cusp-hierarchy/1"
SUITES = ("roots", "cocycle", "periods", "hqe", "gamma", "all")
DEFAULT_ORDER_CAP = 256


class UsageError(ValueError):
    pass


def frac(x) -> str:
    return str(Fraction(x))


@dataclass
class Report:
    """Deterministic result record for one command invocation."""

    command: str
    triple: list[int]
    status: str                      # "pass" | "fail"
    payload: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    schema: str = SCHEMA

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(command=d["command"], triple=list(d["triple"]), status=d["status"],
                   payload=d["payload"], failures=d["failures"], schema=d["schema"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, s: str) -> "Report":
        return cls.from_dict(json.loads(s))


def _order_cap() -> int:
    raw = os.environ.get("CUSP_MAX_CYCLOTOMIC_ORDER", "")
    return int(raw) if raw else DEFAULT_ORDER_CAP


def _build(a1: int, a2: int, a3: int) -> MilnorSystem:
    try:
        ms = build_root_system((a1, a2, a3))
    except NotFanoError as exc:
        raise UsageError(str(exc)) from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    n = ms.orb.triple.cyclotomic_order
    if n > _order_cap():
        raise UsageError(
            f"ambient cyclotomic order {n} exceeds cap {_order_cap()} "
            f"(set CUSP_MAX_CYCLOTOMIC_ORDER to raise it)")
    return ms


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------

def cmd_classify(a1: int, a2: int, a3: int) -> Report:
    ms = _build(a1, a2, a3)
    ed = coxeter_sigma(ms)
    exponents = {}
    for i, m in sorted(ed.exponents.items()):
        key = "01" if i == (0, 1) else "02" if i == (0, 2) else f"{i[0]}.{i[1]}"
        exponents[key] = m
    payload = {
        "type": ms.finite.type_tag,
        "N": ms.rank,
        "chi": frac(ms.orb.triple.chi),
        "kappa": ms.orb.triple.kappa,
        "sigma_order": ms.sigma_order,
        "root_count": len(ms.finite.roots),
        "positive_count": len(ms.finite.positive),
        "kac_labels": list(ms.finite.kac_labels),
        "exponents": exponents,
    }
    return Report("classify", [a1, a2, a3], "pass", payload)


# ---------------------------------------------------------------------------
# verify suites
# ---------------------------------------------------------------------------

def _simple_roots(ms: MilnorSystem) -> list[RootVector]:
    return [RootVector(tuple(int(i == j) for i in range(ms.rank)))
            for j in range(ms.rank)]


def _random_lattice(ms: MilnorSystem, rng: random.Random, bound: int = 3) -> RootVector:
    return RootVector(tuple(rng.randint(-bound, bound) for _ in range(ms.rank)))


def _suite_roots(ms: MilnorSystem, rng: random.Random, checks: list) -> None:
    fin = ms.finite
    counts = {"A": lambda n: n * (n + 1), "D": lambda n: 2 * n * (n - 1),
              "E": lambda n: {6: 72, 7: 126, 8: 240}[n]}
    expected = counts[fin.type_tag[0]](ms.rank)
    _check(checks, "root_count == closed form for the type",
           len(fin.roots) == expected,
           {"count": len(fin.roots), "expected": expected})
    _check(checks, "all roots have squared norm 2",
           all(ms.root_pairing(r, r) == 2 for r in fin.roots))
    _check(checks, "|sigma_b| == lcm(a1,a2,a3)",
           ms.sigma_order == ms.orb.triple.sigma_order)
    try:
        kac = affine_kernel_check(ms)
        _check(checks, "affine Gram PSD of rank N with Kac-vector kernel", True,
               {"kac": list(kac)})
    except AssertionError as exc:
        _check(checks, "affine Gram PSD of rank N with Kac-vector kernel", False,
               {"error": str(exc)})
    _check(checks, "delta decomposition has all Kac labels >= 1",
           all(k >= 1 for k in fin.kac_labels))
    ed = coxeter_sigma(ms)
    ok = True
    for i in ms.orb.index.labels:
        v = ed.eigen_bases[i]
        ev = ed.eigenvalues[i]
        if ms.sigma_on_coh(v) != v.map_coefficients(lambda c, e=ev: c * e):
            ok = False
    _check(checks, "sigma_b eigen-lines carry e^{-2 pi i d_i}", ok)
    try:
        fundamental_weights(ms)
        _check(checks, "branch-star weight identities", True)
    except AssertionError as exc:
        _check(checks, "branch-star weight identities", False, {"error": str(exc)})
    for k in (1, 2, 3):
        if ms.orb.triple.a[k - 1] >= 2:
            try:
                sigma_inverse_entries(ms, k)
                _check(checks, f"(1-sigma_{k})^(-1) closed form", True)
            except AssertionError as exc:
                _check(checks, f"(1-sigma_{k})^(-1) closed form", False,
                       {"error": str(exc)})
    ok = True
    for r in rng.sample(fin.roots, min(len(fin.roots), 40)):
        y = ms.monodromy(r)
        if ms.root_pairing(y, y) != 2:
            ok = False
    _check(checks, "monodromy preserves root norms", ok)
    _check(checks, "sigma_b preserves the intersection form",
           all(ms.root_pairing(ms.sigma_apply(x), ms.sigma_apply(y)) == ms.root_pairing(x, y)
               for x in _simple_roots(ms) for y in _simple_roots(ms)))


def _suite_cocycle(ms: MilnorSystem, rng: random.Random, checks: list) -> None:
    try:
        cocycle_kappa(ms)
        _check(checks, "kappa parity rule and upsilon-orbit parity", True,
               {"kappa": ms.orb.triple.kappa})
    except AssertionError as exc:
        _check(checks, "kappa parity rule and upsilon-orbit parity", False,
               {"error": str(exc)})
    _check(checks, "SF(alpha,alpha) == 1 on all roots",
           all(sf(ms, r, r) == 1 for r in ms.finite.roots))
    simple = _simple_roots(ms)
    pairs = [(x, y) for x in simple for y in simple]
    pairs += [(_random_lattice(ms, rng), _random_lattice(ms, rng)) for _ in range(500)]
    _check(checks, "SF(a,b) + SF(b,a) == (a|b)",
           all(sf(ms, x, y) + sf(ms, y, x) == ms.root_pairing(x, y) for x, y in pairs))
    _check(checks, "epsilon bimultiplicative in each slot",
           all(epsilon(ms, x + y, z) == epsilon(ms, x, z) * epsilon(ms, y, z)
               and epsilon(ms, z, x + y) == epsilon(ms, z, x) * epsilon(ms, z, y)
               for x, y, z in [(_random_lattice(ms, rng), _random_lattice(ms, rng),
                                _random_lattice(ms, rng)) for _ in range(200)]))
    _check(checks, "epsilon(a,a) == (-1)^{|a|^2/2}",
           all(epsilon(ms, x, x) == (-1) ** ((ms.root_pairing(x, x) // 2) % 2)
               for x, _ in pairs))
    _check(checks, "epsilon/upsilon sigma_b-twist relation",
           all(zeta_relation_holds(ms, x, y) for x, y in pairs))
    _check(checks, "product (1 - eta^m) over m < kappa == kappa",
           product_one_minus_eta(ms.orb.triple.kappa).as_rational()
           == ms.orb.triple.kappa)


def _suite_periods(ms: MilnorSystem, rng: random.Random, checks: list) -> None:
    cycles = [("simple", nd) for nd in ms.nodes] + ["delta"]
    cycles += [("alpha", k, m) for k in (1, 2, 3) for m in (0, 1)]
    ok = True
    witness = {}
    for cyc in cycles:
        for lvl in range(-3, 2):
            rep = check_period_odes(ms, cyc, lvl)
            if not rep.ok:
                ok = False
                witness = {"cycle": str(cyc), "level": lvl,
                           "witness": {k: repr(v) for k, v in rep.witnesses().items()}}
    _check(checks, "period identities (derivative, grading, divisor) at levels -3..2",
           ok, witness)
    per = calibrated_period(ms, "delta", -1)
    delta_ok = set(per.components) == {(0, 2)} and \
        per.components[(0, 2)].coefficient(0, 0).coefficient(1, 0, 0).as_rational() == 1
    _check(checks, "level -1 period of delta == 2 pi i P", delta_ok)
    ok = True
    simple = _simple_roots(ms)
    for x in simple:
        for y in simple:
            try:
                saito_pairing(ms, x, y)
            except AssertionError:
                ok = False
    _check(checks, "period-image pairing matches the lattice Gram matrix", ok)
    _check(checks, "lambda-continuation matches the monodromy action",
           all(monodromy_matches_continuation(ms, ("simple", nd)) for nd in ms.nodes)
           and monodromy_matches_continuation(ms, "delta"))


def _suite_hqe(ms: MilnorSystem, rng: random.Random, checks: list) -> None:
    try:
        value = constant_term_identity(ms)
        _check(checks, "sum_a_alpha == (1/12)*sum (a_k^2-1)/a_k == grading trace",
               True, {"value": frac(value)})
    except AssertionError as exc:
        _check(checks, "sum_a_alpha == (1/12)*sum (a_k^2-1)/a_k == grading trace",
               False, {"error": str(exc)})
    ok = True
    first_error = {}
    for alpha in ms.finite.roots:
        try:
            b_coefficient_match(ms, alpha)
        except AssertionError as exc:
            ok = False
            if not first_error:
                first_error = {"error": str(exc)}
    _check(checks, "b-coefficient: direct formula == algebraic phase-factor limit",
           ok, first_error)
    roots = ms.finite.roots
    ok = True
    for _ in range(100):
        x, y = rng.choice(roots), rng.choice(roots)
        rep = commutator_identity(ms, x, y)
        if not rep.ok:
            ok = False
    _check(checks, "commutator scalar identity on random root pairs", ok)
    ok = True
    for _ in range(50):
        x, y = rng.choice(roots), rng.choice(roots)
        r1 = commutator_identity(ms, x, y)
        r2 = commutator_identity(ms, y, x)
        if r1.lhs * r2.lhs != CycloNumber.from_rational(1):
            ok = False
    _check(checks, "commutator exchange symmetry", ok)


def _suite_gamma(ms: MilnorSystem, rng: random.Random, checks: list) -> None:
    import math
    orb = ms.orb
    _check(checks, "gamma evaluator matches reference values to 1e-12",
           all(abs(math.gamma(x) - v) / abs(v) < 1e-12
               for x, v in GAMMA_REFERENCE_VALUES))
    ok = True
    worst = 0.0
    for k in (1, 2, 3):
        for m in range(orb.triple.a[k - 1]):
            for ell in (1, 2):
                rep = laplace_match(ms, k, m, ell)
                worst = max(worst, rep.max_error)
                ok = ok and rep.ok
    _check(checks, "termwise Laplace of periods == Gamma-weighted character (1e-10)",
           ok, {"max_error": worst})
    try:
        _, n = euler_pairing(k_unit(orb), k_unit(orb), orb)
        _check(checks, "chi(O, O) == 1", n == 1)
    except ArithmeticError as exc:
        _check(checks, "chi(O, O) == 1", False, {"error": str(exc)})
    ok = True
    worst = 0.0
    for k1 in (1, 2, 3):
        for m1 in range(orb.triple.a[k1 - 1]):
            for k2 in (1, 2, 3):
                for m2 in range(orb.triple.a[k2 - 1]):
                    v = symmetrized_euler(k_generator(orb, k1, m1),
                                          k_generator(orb, k2, m2), orb)
                    want = ms.root_pairing(alpha_root(ms, k1, m1), alpha_root(ms, k2, m2))
                    worst = max(worst, abs(v - int(want)))
                    ok = ok and abs(v - int(want)) < 1e-9
    _check(checks, "symmetrized Euler pairing == lattice intersection table (1e-9)",
           ok, {"max_error": worst})
    det = euler_gram_determinant(orb)
    _check(checks, "Euler-pairing Gram determinant == +-1", abs(det) == 1,
           {"det": det})


def _check(checks: list, name: str, ok: bool, extra: dict | None = None) -> None:
    entry = {"identity": name, "status": "pass" if ok else "fail"}
    if extra:
        entry.update(extra)
    checks.append(entry)


_SUITE_RUNNERS = {
    "roots": _suite_roots,
    "cocycle": _suite_cocycle,
    "periods": _suite_periods,
    "hqe": _suite_hqe,
    "gamma": _suite_gamma,
}


def cmd_verify(a1: int, a2: int, a3: int, suite: str = "all",
               seed: int = 2024) -> Report:
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    ms = _build(a1, a2, a3)
    names = [s for s in SUITES if s != "all"] if suite == "all" else [suite]
    checks: list[dict] = []
    for name in names:
        _SUITE_RUNNERS[name](ms, random.Random(seed), checks)
    failures = [c for c in checks if c["status"] == "fail"]
    status = "pass" if not failures else "fail"
    payload = {"suite": suite, "root_count": len(ms.finite.roots),
               "type": ms.finite.type_tag, "checks": checks}
    return Report("verify", [a1, a2, a3], status, payload, failures)


# ---------------------------------------------------------------------------
# potential
# ---------------------------------------------------------------------------

def _poly_str(p: gw222.Poly) -> str:
    if not p:
        return "0"
    names = ("t01", "t02", "t1", "t2", "t3")
    bits = []
    for mono, c in sorted(p.items()):
        factors = [str(c)]
        for i, e in enumerate(mono):
            if e == 1:
                factors.append(names[i])
            elif e > 1:
                factors.append(f"{names[i]}^{e}")
        bits.append("*".join(factors))
    return " + ".join(bits)


def cmd_potential(max_degree: int, wdvv: bool = False) -> Report:
    if max_degree < 1:
        raise UsageError("--max-degree must be >= 1 (the seed alone is not a run)")
    rec = gw222.solve_recursion(max_degree)
    closed = gw222.closed_form_potential()
    degrees = {}
    all_match = True
    for d in range(1, max_degree + 1):
        match = rec.part(d) == closed.part(d)
        all_match = all_match and match
        degrees[str(d)] = {"match": match, "value": _poly_str(rec.part(d))}
    payload = {"max_degree": max_degree, "degrees": degrees,
               "four_point": frac(gw222.four_point_invariant(1)),
               "weighted_homogeneity": gw222.weighted_homogeneity_ok(rec)}
    failures = [d for d, v in degrees.items() if not v["match"]]
    if wdvv:
        rep = gw222.wdvv_check(rec, max_degree=max(max_degree, 8))
        payload["wdvv"] = {"ok": rep.ok, "residual_count": len(rep.residuals)}
        if not rep.ok:
            failures.append("wdvv")
    status = "pass" if not failures and payload["weighted_homogeneity"] else "fail"
    return Report("potential", [2, 2, 2], status, payload, failures)


def cmd_report(a1: int, a2: int, a3: int) -> Report:
    ms = _build(a1, a2, a3)
    return Report("report", [a1, a2, a3], "pass", hqe_report(ms))


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _emit(report: Report, as_json: bool) -> None:
    if as_json:
        print(report.to_json())
        return
    print(f"[{report.command}] triple {tuple(report.triple)}: {report.status}")
    if report.command == "classify":
        for key in ("type", "N", "chi", "kappa", "sigma_order", "root_count",
                    "positive_count", "kac_labels"):
            print(f"  {key:>15}: {report.payload[key]}")
        print(f"  {'exponents':>15}: {report.payload['exponents']}")
    elif report.command == "verify":
        for c in report.payload["checks"]:
            mark = "ok " if c["status"] == "pass" else "FAIL"
            print(f"  [{mark}] {c['identity']}")
    elif report.command == "potential":
        for d, v in report.payload["degrees"].items():
            mark = "ok " if v["match"] else "FAIL"
            print(f"  [{mark}] degree {d}: {v['value']}")
        print(f"  four-point invariant: {report.payload['four_point']}")
        if "wdvv" in report.payload:
            print(f"  wdvv residual zero: {report.payload['wdvv']['ok']}")
    else:
        print(json.dumps(report.payload, indent=2, sort_keys=True))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cusp-hierarchy",
        description="Exact root-system, cocycle, period and potential data for "
                    "Fano orbifold lines")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="type, kappa, Kac labels, exponents")
    p.add_argument("a", type=int, nargs=3, metavar=("A1", "A2", "A3"))
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run identity suites")
    p.add_argument("a", type=int, nargs=3, metavar=("A1", "A2", "A3"))
    p.add_argument("--suite", default="all", choices=SUITES)
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("potential", help="(2,2,2) genus-0 potential recursion")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--wdvv", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("report", help="JSON coefficient report")
    p.add_argument("a", type=int, nargs=3, metavar=("A1", "A2", "A3"))
    p.add_argument("--json", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "classify":
            report = cmd_classify(*args.a)
        elif args.command == "verify":
            report = cmd_verify(*args.a, suite=args.suite, seed=args.seed)
        elif args.command == "potential":
            report = cmd_potential(args.max_degree, wdvv=args.wdvv)
        elif args.command == "report":
            report = cmd_report(*args.a)
        else:  # pragma: no cover
            raise UsageError(f"unknown command {args.command}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args.json)
    return 0 if report.status == "pass" else 1


if __name__ == "__main__":
    sys.exit(main())
