"""Command-line front end: ``sphericalweights <command> --case N --n .. [--format json|tsv]``.

Every command writes a single report to stdout.  JSON reports carry
``"schema": 1`` and depend only on the arguments, so identical invocations
produce identical bytes.  Exit codes: 0 when every check passed, 1 when a
check failed, 2 for invalid arguments.
"""
from __future__ import annotations

import argparse
import json
import sys

from .branching import weyl_dim_coeffs
from .canonical import (
    UnsupportedCase,
    canonical_report,
    localized_functions,
    reconstruct_check,
)
from .cases import CANONICAL_CASES, CaseParameterError, get_case, table_generators
from .functions import (
    sample_nonvanishing,
    verify_central_invariance,
    verify_constants,
    verify_equivariance,
    verify_invariances,
    verify_relations,
)
from .groups import make_rng
from .irreducibility import certify_case
from .spectrum import (
    DEFAULT_DEGREE_BOUND,
    Chain,
    case12_generators,
    multiplicity_free,
    spectrum_for_case,
)
from .weights import rank_of_weights

SCHEMA = 1


class UsageError(ValueError):
    pass


def _spec(args):
    try:
        return get_case(args.case, n=args.n, m=args.m, l=args.l)
    except CaseParameterError as e:
        raise UsageError(str(e)) from e


def _emit(report: dict, fmt: str, tsv_rows=None) -> None:
    if fmt == "tsv" and tsv_rows is not None:
        for row in tsv_rows:
            print("\t".join(str(x) for x in row))
        return
    print(json.dumps({"schema": SCHEMA, **report}, ensure_ascii=False, indent=2))


def _weight_cells(w) -> list:
    return [",".join(map(str, c)) for c in w.weight.coeffs] + [w.char]


# ---------------------------------------------------------------------------
# commands

def cmd_table(args) -> int:
    spec = _spec(args)
    try:
        weights = table_generators(args.case, n=args.n, m=args.m, l=args.l)
    except CaseParameterError as e:
        raise UsageError(str(e)) from e
    names = [str(w) for w in weights] if args.case == 1 else spec.generator_names()
    rows = [{"generator": name, "weight": str(w), "coords": w.to_json()}
            for name, w in zip(names, weights)]
    report = {"command": "table", "case": args.case, "params": spec.params,
              "group": [str(F) for F in spec.factors], "generators": rows}
    _emit(report, args.format, [[r["generator"], r["weight"]] + _weight_cells(w)
                                for r, w in zip(rows, weights)])
    return 0


def _suite_spectra(spec, args) -> dict:
    bound = args.degree_bound
    try:
        gens = case12_generators(spec.case, spec.n, bound, check_bound=bound + 1)
    except AssertionError as e:
        return {"check": "spectral generators", "pass": False, "error": str(e)}
    return {"check": "spectral generators", "degree_bound": bound, "stability_bound": bound + 1,
            "generators": [str(w) for w in gens], "pass": True}


def _suite_freeness(spec) -> dict:
    ws = table_generators(spec.case, **spec.params)
    r = rank_of_weights(ws)
    return {"check": "freeness", "rank": r, "length": len(ws), "pass": r == len(ws)}


def cmd_verify(args) -> int:
    spec = _spec(args)
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    t, s = args.trials, args.seed
    suites = []
    if spec.case in (1, 2):
        suites.append(_suite_spectra(spec, args))
    suites.append(_suite_freeness(spec))
    eq = [verify_equivariance(spec, f, t, s) for f in spec.functions.values()]
    suites.append({"check": "equivariance", "functions": eq, "pass": all(r["pass"] for r in eq)})
    suites.append(verify_invariances(spec, t, s))
    suites.append(verify_relations(spec, t, s))
    suites.append(verify_constants(spec))
    if spec.central:
        suites.append(verify_central_invariance(spec, t, s))
    if spec.case in CANONICAL_CASES:
        suites.append(reconstruct_check(spec.case, t, s, **spec.params))
    if spec.lattice or spec.semigroup:
        suites.append(certify_case(spec))
    ok = all(x["pass"] for x in suites)
    report = {"command": "verify", "case": spec.case, "params": spec.params, "trials": t,
              "seed": s, "suites": suites, "pass": ok}
    _emit(report, args.format, [[x["check"], "pass" if x["pass"] else "FAIL"] for x in suites])
    return 0 if ok else 1


def _parse_coeffs(text: str) -> tuple:
    try:
        c = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as e:
        raise UsageError(f"bad weight {text!r}; expected comma-separated integers") from e
    return c


def cmd_branch(args) -> int:
    if args.n is None:
        raise UsageError("branch needs --n")
    lam = _parse_coeffs(args.weight)
    try:
        chain = Chain(args.chain, args.n)
        if len(lam) != chain.K.rank or any(x < 0 for x in lam):
            raise ValueError(f"{chain.K} needs {chain.K.rank} nonnegative coefficients")
    except ValueError as e:
        raise UsageError(str(e)) from e
    parts = sorted(chain.branch(lam).items())
    dims = sum(weyl_dim_coeffs(chain.L, mu) * m for mu, m in parts)
    total = weyl_dim_coeffs(chain.K, lam)
    ok = dims == total
    report = {"command": "branch", "chain": str(chain), "weight": list(lam),
              "constituents": [{"weight": list(mu), "multiplicity": m} for mu, m in parts],
              "dimension": total, "restricted_dimension": dims, "pass": ok}
    _emit(report, args.format, [[",".join(map(str, mu)), m] for mu, m in parts])
    return 0 if ok else 1


def cmd_spectrum(args) -> int:
    if args.case not in (1, 2):
        raise UsageError("spectrum is defined for cases 1 and 2")
    spec = _spec(args)
    if args.degree_bound < 0:
        raise UsageError("--degree-bound must be >= 0")
    entries = spectrum_for_case(args.case, spec.n, args.degree_bound)
    rows = [{"weight": list(list(c) for c in e.weight.coeffs), "char": e.char,
             "multiplicity": e.multiplicity} for e in entries]
    report = {"command": "spectrum", "case": args.case, "params": spec.params,
              "degree_bound": args.degree_bound, "entries": rows,
              "multiplicity_free": multiplicity_free(entries)}
    tsv = [[",".join(map(str, c)) for c in e.weight.coeffs]
           + ([e.char] if e.char is not None else []) + [e.multiplicity] for e in entries]
    _emit(report, args.format, tsv)
    return 0


def cmd_irreducible(args) -> int:
    spec = _spec(args)
    if not (spec.lattice or spec.semigroup):
        raise UsageError(f"case {args.case} has no function generators to certify")
    rep = certify_case(spec)
    tsv = [[v["generator"], v["method"], "irreducible" if v["irreducible"] else "REDUCIBLE",
            json.dumps(v["detail"], ensure_ascii=False, sort_keys=True)] for v in rep["verdicts"]]
    tsv += [["witness", w["generator"], "pass" if w["pass"] else "FAIL",
             json.dumps(w["values"], ensure_ascii=False, sort_keys=True)] for w in rep["witnesses"]]
    _emit({"command": "irreducible", **rep}, args.format, tsv)
    return 0 if rep["pass"] else 1


def cmd_canonical(args) -> int:
    spec = _spec(args)
    rng = make_rng(args.seed, "cli canonical", spec.label)
    g, vals = sample_nonvanishing(spec, localized_functions(spec), rng)
    try:
        rep = canonical_report(spec, g)
    except UnsupportedCase as e:
        raise UsageError(str(e)) from e
    report = {"command": "canonical", "case": spec.case, "params": spec.params, "seed": args.seed,
              "g": [M.to_json() for M in g],
              "values": {k: str(v) for k, v in vals.items()}, **rep}
    tsv = [[name, json.dumps(M)] for name, M in rep["slices"].items()]
    tsv += [[s["step"], s["kind"], json.dumps(s["matrices"])] for s in rep["transcript"]]
    _emit(report, args.format, tsv)
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sphericalweights",
                                description="Exact extended weight semigroups of spherical spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, case_required=True, trials=False):
        sp.add_argument("--case", type=int, required=case_required)
        sp.add_argument("--n", type=int)
        sp.add_argument("--m", type=int)
        sp.add_argument("--l", type=int)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--degree-bound", type=int, default=DEFAULT_DEGREE_BOUND)
        sp.add_argument("--format", choices=("json", "tsv"), default="json")
        if trials:
            sp.add_argument("--trials", type=int, default=20)

    common(sub.add_parser("table", help="list the generators of the extended weight semigroup"))
    common(sub.add_parser("verify", help="run every check for one parameter point"), trials=True)
    b = sub.add_parser("branch", help="restrict an irreducible module along SL or Spin chains")
    common(b, case_required=False)
    b.add_argument("--chain", choices=("sl", "spin"), required=True)
    b.add_argument("--weight", required=True, help="fundamental coefficients, e.g. 1,0,2")
    common(sub.add_parser("spectrum", help="spectrum of cases 1 and 2 up to a degree bound"))
    common(sub.add_parser("irreducible", help="irreducibility certificates per generator"))
    common(sub.add_parser("canonical", help="reduce a random point of M to canonical form"))
    return p


COMMANDS = {"table": cmd_table, "verify": cmd_verify, "branch": cmd_branch,
            "spectrum": cmd_spectrum, "irreducible": cmd_irreducible, "canonical": cmd_canonical}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
