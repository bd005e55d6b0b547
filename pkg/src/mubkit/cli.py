"""Command-line front end.

Exit codes: 0 pass, 1 verification failure, 2 usage or input error,
3 method/dimension mismatch. ``MUB_TOLERANCE`` overrides the default 1e-9.
"""
import argparse
import csv
import json
import os
import sys

from mubkit import gauss
from mubkit.constructions import (
    METHOD_BUILDERS,
    MubSet,
    all_max_coprime_cliques,
    construct_mubs,
)
from mubkit.fixtures import run_fixtures
from mubkit.generators import check_identities
from mubkit.verification import brute_force_inner_products, verify_mum

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


def default_tolerance():
    raw = os.environ.get("MUB_TOLERANCE")
    if not raw:
        return 1e-9
    try:
        tol = float(raw)
    except ValueError:
        raise UsageError(f"MUB_TOLERANCE is not a number: {raw!r}")
    if not tol >= 0:
        raise UsageError("MUB_TOLERANCE must be non-negative")
    return tol


def _err(msg):
    print(msg, file=sys.stderr)


def cmd_gen(args):
    if args.dim < 2:
        raise UsageError(f"--dim must be at least 2, got {args.dim}")
    if args.method:
        try:
            mubs = METHOD_BUILDERS[args.method](args.dim)
        except ValueError as exc:
            _err(f"method {args.method} does not apply to d={args.dim}: {exc}")
            return EXIT_MISMATCH
    else:
        mubs = construct_mubs(args.dim)
    text = json.dumps(mubs.to_json())
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    _err(f"claimed_count={mubs.claimed_count} method={mubs.method.value}")
    return EXIT_OK


def cmd_verify(args, tol):
    try:
        with open(args.input) as fh:
            mubs = MubSet.from_json(json.load(fh))
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise UsageError(f"cannot read MUB set from {args.input}: {exc}")
    report = verify_mum(mubs, tol)
    overlap = brute_force_inner_products(mubs)
    oracle_ok = overlap.deviation() < tol
    out = report.to_json()
    out["claimed_count"] = mubs.claimed_count
    out["oracle"] = {
        "max_overlap": overlap.maximum,
        "min_overlap": overlap.minimum,
        "vacuous": overlap.vacuous,
        "passed": oracle_ok,
    }
    out["passed"] = report.passed and oracle_ok
    print(json.dumps(out))
    if not out["passed"]:
        for f in report.failures:
            _err(f)
        return EXIT_FAIL
    return EXIT_OK


def cmd_search(args):
    if args.dim < 3 or args.dim % 2 == 0:
        raise UsageError(f"--dim must be odd and at least 3, got {args.dim}")
    cliques = all_max_coprime_cliques(args.dim)
    shown = cliques if args.all else cliques[:1]
    print(json.dumps({
        "dim": args.dim,
        "size": len(cliques[0]),
        "count_through_zero": len(cliques),
        "cliques": [list(c.members) for c in shown],
    }))
    return EXIT_OK


def cmd_identities(args, tol):
    if args.dim < 1:
        raise UsageError(f"--dim must be positive, got {args.dim}")
    report = check_identities(args.dim, tol)
    for name, dev in report.identities.items():
        print(f"{name}\t{dev:.3e}\t{'pass' if dev < tol else 'FAIL'}")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_gauss(args, tol):
    try:
        if args.mode == "trace":
            if args.dim is None or args.dim < 1 or args.dim % 2 == 0:
                raise UsageError("--mode trace needs an odd --dim")
            rows = gauss.trace_rows(args.dim, tol)
        elif args.mode == "even":
            if args.dim is not None:
                dims = [args.dim]
            elif args.max_dim is not None:
                dims = range(2, args.max_dim + 1, 2)
            else:
                raise UsageError("--mode even needs --dim or --max-dim")
            rows = gauss.even_rows(dims, tol)
        elif args.mode == "S":
            if None in (args.a, args.b, args.dim):
                raise UsageError("--mode S needs --a, --b and --dim")
            rows = gauss.S_rows(args.a, args.b, args.dim, tol)
        else:
            if None not in (args.a, args.b, args.dim):
                params = [(args.a, args.b, args.dim)]
            else:
                params = gauss.valid_reciprocity_params(args.max_abs)
            rows = gauss.reciprocity_rows(params, tol)
    except ValueError as exc:
        raise UsageError(str(exc))
    writer = csv.DictWriter(sys.stdout, fieldnames=gauss.TABLE_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: (repr(v) if isinstance(v, float) else v) for k, v in row.items()})
    return EXIT_OK if all(r["ok"] for r in rows) else EXIT_FAIL


def cmd_fixtures(args):
    results = run_fixtures()
    for r in results:
        print(r.line())
    bad = [r for r in results if not r.ok]
    disc = sum(r.status == "discrepancy" for r in results)
    _err(f"{len(results)} checks, {len(bad)} failed, {disc} printed-vs-generated discrepancies")
    return EXIT_FAIL if bad else EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="mubkit", description=__doc__.splitlines()[0])
    p.add_argument("--tol", type=float, default=None, help="absolute tolerance (default 1e-9)")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="construct a MUB set and write it as JSON")
    g.add_argument("--dim", type=int, required=True)
    g.add_argument("--method", choices=sorted(METHOD_BUILDERS))
    g.add_argument("--out")

    v = sub.add_parser("verify", help="verify a MUB set JSON file")
    v.add_argument("--in", dest="input", required=True)
    v.add_argument("--tol", type=float, default=None)

    s = sub.add_parser("search", help="maximum coprime-difference cliques for odd d")
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--all", action="store_true", help="list every maximum clique through 0")

    i = sub.add_parser("identities", help="check the clock/shift identities")
    i.add_argument("--dim", type=int, required=True)
    i.add_argument("--tol", type=float, default=None)

    gs = sub.add_parser("gauss", help="tabulate Gauss sums as CSV")
    gs.add_argument("--mode", choices=["trace", "S", "reciprocity", "even"], required=True)
    gs.add_argument("--dim", type=int)
    gs.add_argument("--a", type=int)
    gs.add_argument("--b", type=int)
    gs.add_argument("--max-dim", type=int)
    gs.add_argument("--max-abs", type=int, default=12)
    gs.add_argument("--tol", type=float, default=None)

    sub.add_parser("fixtures", help="compare printed matrices with generated ones")
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        tol = args.tol if args.tol is not None else default_tolerance()
        if args.command == "gen":
            return cmd_gen(args)
        if args.command == "verify":
            return cmd_verify(args, tol)
        if args.command == "search":
            return cmd_search(args)
        if args.command == "identities":
            return cmd_identities(args, tol)
        if args.command == "gauss":
            return cmd_gauss(args, tol)
        return cmd_fixtures(args)
    except UsageError as exc:
        _err(f"mubkit: error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
