"""``charvar`` command line: one JSON document per run on stdout.

Exit codes: 0 success, 2 invalid input, 3 refuted identity or failed
certificate.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import chebyshev, geometry, oracle, variety, words
from .errors import ClosedFormMismatch, NonHyperbolic, ValidationError, VerificationError

EXIT_OK, EXIT_INVALID, EXIT_REFUTED = 0, 2, 3


def _odd_range(lo, hi):
    return [v for v in range(lo, hi + 1) if v % 2]


def _hyperbolic_odd(max_kl):
    vals = [v for v in range(3, max_kl + 1, 2)]
    return vals + [-v for v in vals]


# ---------------------------------------------------------------------------
# commands


def cmd_phi(a):
    model = variety.build_model(a.k, a.l)
    kappa = variety.reducible_poly()
    traced = words.phi_via_traces(a.k, a.l)
    product = kappa * model.irr_model
    if product != traced:
        raise ClosedFormMismatch(f"kappa * model differs from P_rab - P_bar for ({a.k},{a.l})")
    return {
        "k": a.k,
        "l": a.l,
        "phi": traced.to_json(),
        "reducible": kappa.to_json(),
        "irr_model": model.irr_model.to_json(),
        "factorization_verified": True,
    }


def cmd_curve(a):
    return variety.build_model(a.k, a.l).to_json()


def cmd_split(a):
    diag, rest = variety.diagonal_split(a.l)
    comps = [{"label": "canonical", "poly": diag.to_json()}]
    if rest is not None:
        comps.append({"label": "extra", "poly": rest.to_json()})
    return {"l": a.l, "curve": variety.curve_poly(a.l, a.l).to_json(), "components": comps}


def cmd_invariants(a):
    return geometry.invariants(a.k, a.l).to_json()


def cmd_singular(a):
    out = geometry.singular_points(a.m).to_json()
    if a.crosscheck:
        out["numeric"] = geometry.singular_search_crosscheck(a.m, a.tol)
    return out


def cmd_fibers(a):
    return geometry.degenerate_fibers(a.m).to_json()


def cmd_blowup(a):
    return geometry.euler_blowup(a.m).to_json()


def cmd_smooth(a):
    return geometry.smoothness_check(a.k, a.l, a.tol)


def cmd_oracle(a):
    params = {"k": a.k, "l": a.l, "m": a.m, "word": a.word}
    return oracle.pit_check(a.claim, a.trials, a.prime, a.seed, fault=a.fault, **params)


# verify sub-suites; each returns a JSON-able dict or raises VerificationError


def _suite_identities(a):
    return chebyshev.identity_suite(a.jmax)


def _suite_phi(a):
    vals = _hyperbolic_odd(a.max_kl)
    kappa = variety.reducible_poly()
    for k in vals:
        for l in vals:
            if kappa * variety.natural_model(k, l) != words.phi_via_traces(k, l):
                raise ClosedFormMismatch(f"factorization fails at ({k},{l})")
    return {"pairs": len(vals) ** 2, "passed": True}


def _suite_t(a):
    ms = [m for m in range(-4, 5) if m != -1]
    for m in ms:
        wk = words.link_words(m, 0).wk
        if variety.t_poly(m) != words.trace_poly(wk):
            raise ClosedFormMismatch(f"t_poly({m}) differs from the trace of w_k")
    return {"m_values": ms, "passed": True}


def _suite_split(a):
    ls = _hyperbolic_odd(max(a.max_kl, 3))
    for l in ls:
        variety.diagonal_split(l)
    return {"l_values": ls, "passed": True}


def _suite_invariants(a):
    vals = _hyperbolic_odd(a.max_kl)
    for k in vals:
        for l in vals:
            geometry.invariants(k, l)
    return {"pairs": len(vals) ** 2, "passed": True}


SURFACE_MS = [1, 2, 3, 4, -2, -3, -4]


def _suite_singular(a):
    counts = {m: geometry.singular_points(m).count for m in SURFACE_MS}
    numeric = {m: geometry.singular_search_crosscheck(m)["count"] for m in SURFACE_MS if abs(m) <= 3}
    return {"counts": counts, "numeric": numeric, "passed": True}


def _suite_fibers(a):
    for m in SURFACE_MS:
        geometry.degenerate_fibers(m)
    return {"m_values": SURFACE_MS, "passed": True}


def _suite_blowup(a):
    reps = [geometry.euler_blowup(m).to_json() for m in range(-6, 7) if m not in (-1, 0)]
    return {"reports": reps, "passed": True}


def _suite_birational(a):
    reps = [variety.birational_roundtrip(m, 100, a.seed) for m in range(-4, 5)]
    return {"m_values": [r["m"] for r in reps], "passed": True}


def _suite_oracle(a):
    vals = [v for v in _hyperbolic_odd(min(a.max_kl, 7))]
    checks = [oracle.pit_check("trace_poly_of", 50, seed=a.seed)]
    checks += [oracle.pit_check("t_is_Pwk", 50, seed=a.seed, m=m) for m in range(-3, 4)]
    for k in vals:
        for l in vals:
            checks.append(oracle.pit_check("phi", 50, seed=a.seed, k=k, l=l))
            checks.append(oracle.pit_check("model_product", 50, seed=a.seed, k=k, l=l))
    fault = oracle.pit_check("model_product", 50, seed=a.seed, fault="kappa_sign", raise_on_fail=False, k=3, l=5)
    if fault["passed"]:
        raise VerificationError("faulted reducible factor was not refuted")
    return {"checks": len(checks), "fault_refuted": True, "passed": True}


def _suite_smooth(a):
    pairs = [(3, 5), (5, 7), (3, -5), (-5, 7), (5, -7), (5, 5), (7, 7)]
    reps = [geometry.smoothness_check(k, l) for k, l in pairs]
    bounds = [geometry.critical_value_bound(n) for n in (1, 2, 3, 4, -2, -3, -4)]
    if not all(b["passed"] for b in bounds):
        raise VerificationError("critical-value bound fails")
    return {"pairs": [list(p) for p in pairs], "passed": all(r["passed"] for r in reps)}


SUITES = {
    "identities": _suite_identities,
    "phi": _suite_phi,
    "t": _suite_t,
    "split": _suite_split,
    "invariants": _suite_invariants,
    "singular": _suite_singular,
    "fibers": _suite_fibers,
    "blowup": _suite_blowup,
    "birational": _suite_birational,
    "oracle": _suite_oracle,
    "smooth": _suite_smooth,
}


def _run_suite(name, a):
    try:
        return name, SUITES[name](a)
    except VerificationError as e:
        return name, {"passed": False, "error": type(e).__name__, "message": str(e)}


def cmd_verify(a):
    names = sorted(SUITES) if a.suite == "all" else [a.suite]
    if a.jobs > 1:
        with ProcessPoolExecutor(a.jobs) as pool:
            results = dict(pool.map(_run_suite, names, [a] * len(names)))
    else:
        results = dict(_run_suite(n, a) for n in names)
    out = {"suites": {n: results[n] for n in sorted(results)}, "passed": all(r["passed"] for r in results.values())}
    if not out["passed"]:
        err = VerificationError("verification suite failed")
        err.document = out
        raise err
    return out


def _sweep_cell(kl):
    k, l = kl
    try:
        return {"k": k, "l": l, "report": geometry.invariants(k, l).to_json()}
    except NonHyperbolic as e:
        return {"k": k, "l": l, "error": "NonHyperbolic", "message": str(e)}


def cmd_sweep(a):
    for v in (a.kmin, a.kmax, a.lmin, a.lmax):
        if abs(v) > 99:
            raise ValidationError("sweep bounds must satisfy |k|, |l| <= 99")
    grid = [(k, l) for k in _odd_range(a.kmin, a.kmax) for l in _odd_range(a.lmin, a.lmax)]
    if a.jobs > 1:
        with ProcessPoolExecutor(a.jobs) as pool:
            cells = list(pool.map(_sweep_cell, grid))
    else:
        cells = [_sweep_cell(kl) for kl in grid]
    ok = sum("report" in c for c in cells)
    return {"grid": [list(g) for g in grid], "cells": cells,
            "summary": {"cells": len(cells), "hyperbolic": ok, "non_hyperbolic": len(cells) - ok}}


# ---------------------------------------------------------------------------
# parser


def build_parser():
    ap = argparse.ArgumentParser(prog="charvar", description="Character varieties of double twist links J(k, l).")
    ap.add_argument("--pretty", action="store_true", help="indent the JSON output")
    sub = ap.add_subparsers(dest="command", required=True)

    def kl(p, l_only=False):
        if not l_only:
            p.add_argument("--k", type=int, required=True)
        p.add_argument("--l", type=int, required=True)

    def pretty(p):
        p.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)

    p = sub.add_parser("phi", help="verify kappa * model = P_rab - P_bar")
    kl(p)
    p.set_defaults(func=cmd_phi)
    p = sub.add_parser("curve", help="curve polynomial and models")
    kl(p)
    p.set_defaults(func=cmd_curve)
    p = sub.add_parser("split", help="components of C(l, l)")
    kl(p, l_only=True)
    p.set_defaults(func=cmd_split)
    p = sub.add_parser("invariants", help="bidegree, genus, gonality")
    kl(p)
    p.set_defaults(func=cmd_invariants)

    for name, func, helptext in (
        ("singular", cmd_singular, "certified singular points of the surface model"),
        ("fibers", cmd_fibers, "degenerate fibers of the conic bundle"),
        ("blowup", cmd_blowup, "Euler characteristic and blow-up count"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--m", type=int, required=True)
        if name == "singular":
            p.add_argument("--crosscheck", action="store_true", help="also run the numeric search")
            p.add_argument("--tol", type=float, default=1e-7)
        p.set_defaults(func=func)

    p = sub.add_parser("smooth", help="numeric smoothness spot check")
    kl(p)
    p.add_argument("--tol", type=float, default=1e-7)
    p.set_defaults(func=cmd_smooth)

    p = sub.add_parser("oracle", help="randomized identity test over SL2(F_p)")
    p.add_argument("--claim", choices=oracle.CLAIMS, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--word")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--prime", type=int, default=None, help="default: $CHARVAR_PRIME or 2^61-1")
    p.add_argument("--fault", choices=["kappa_sign"], default=None)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=["all", *sorted(SUITES)], default="all")
    p.add_argument("--jmax", type=int, default=50)
    p.add_argument("--max-kl", type=int, default=9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="invariants over a grid of (k, l)")
    for flag in ("--kmin", "--kmax", "--lmin", "--lmax"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    for action in sub.choices.values():
        pretty(action)
    return ap


def _emit(doc, pretty):
    json.dump(doc, sys.stdout, indent=2 if pretty else None, sort_keys=False, default=str)
    sys.stdout.write("\n")


def main(argv=None):
    ap = build_parser()
    a = ap.parse_args(argv)
    pretty = getattr(a, "pretty", False)
    try:
        doc = a.func(a)
    except ValidationError as e:
        print(f"charvar: {e}", file=sys.stderr)
        _emit({"error": type(e).__name__, "message": str(e)}, pretty)
        return EXIT_INVALID
    except VerificationError as e:
        print(f"charvar: {e}", file=sys.stderr)
        doc = getattr(e, "document", None) or getattr(e, "report", None) or {}
        _emit({"error": type(e).__name__, "message": str(e), **doc}, pretty)
        return EXIT_REFUTED
    _emit(doc, pretty)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
