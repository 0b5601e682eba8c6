"""Batch verification front-end.

Subcommands: ``verify`` runs named suites and emits human and JSON reports;
``mutate``, ``casimirs``, ``geodesic`` and ``evaluate`` are small file-based
tools over the documented JSON schemas.  Exit status: 0 all checks passed,
1 any check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .laurent import RationalFn, SingularPointError
from .quiver import Seed, apply_sequence, corank, monomial_casimirs
from .report import run_suite_checks, write_report
from .suites import SUITE_NAMES, build_suite, unit_count
from .teich import build_surface, catalog_value
from . import surfaces

DEFAULT_SEED = 42


class UsageError(Exception):
    pass


def cmd_verify(args) -> int:
    names = list(SUITE_NAMES) if args.suite == "all" else [args.suite]
    if args.suite not in SUITE_NAMES + ("all",):
        raise UsageError(f"unknown suite {args.suite!r}; expected one of {SUITE_NAMES + ('all',)}")
    failed = 0
    reports = []
    for name in names:
        if name == "casimirs" and args.size is not None:
            from .network import casimir_suite_checks

            checks = casimir_suite_checks(args.size)
        else:
            checks = build_suite(
                name, args.rng, tolerance=args.tolerance, mode=args.mode, trials=args.trials
            )
        report = run_suite_checks(name, checks, args.rng)
        reports.append(report)
        print(report.render_table())
        failed += report.failed
    if args.json:
        if len(reports) == 1:
            write_report(reports[0], args.json)
        else:
            data = {
                "suite": "all",
                "rng_seed": args.rng,
                "suites": [r.to_json() for r in reports],
                "summary": {
                    "pass": sum(r.passed for r in reports),
                    "fail": sum(r.failed for r in reports),
                    "skipped": sum(r.skipped for r in reports),
                },
            }
            with open(args.json, "w") as fh:
                json.dump(data, fh, indent=2, sort_keys=True)
                fh.write("\n")
    return 1 if failed else 0


def _load_seed(path: str) -> Seed:
    with open(path) as fh:
        data = json.load(fh)
    try:
        return Seed.from_json(data)
    except (KeyError, ValueError, TypeError) as exc:
        raise UsageError(f"{path}: bad quiver/seed schema: {exc}") from exc


def cmd_mutate(args) -> int:
    seed = _load_seed(args.quiver)
    seq = []
    if args.seq:
        for item in args.seq.split(","):
            item = item.strip()
            if not item:
                continue
            if "~" in item:
                u, v = item.split("~")
                seq.append((u.strip(), v.strip()))
            else:
                seq.append(item)
    try:
        out = apply_sequence(seed, seq)
    except (KeyError, ValueError, ArithmeticError) as exc:
        raise UsageError(f"mutation failed: {exc}") from exc
    text = json.dumps(out.to_json(), indent=2, sort_keys=True)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_casimirs(args) -> int:
    if args.quiver:
        quiver = _load_seed(args.quiver).quiver
    elif args.surface:
        quiver = build_surface(args.surface).quiver
    else:
        raise UsageError("casimirs needs --quiver FILE or --surface NAME")
    basis = monomial_casimirs(quiver)
    print(f"corank {corank(quiver)}; kernel basis:")
    for mono in basis:
        print(" ", mono.to_text())
    return 0


def cmd_geodesic(args) -> int:
    if args.network:
        from .network import SquareNetwork

        try:
            net = SquareNetwork(args.network)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        text = json.dumps(net.to_json(), indent=2, sort_keys=True)
        if args.json:
            with open(args.json, "w") as fh:
                fh.write(text + "\n")
        else:
            print(text)
        return 0
    if not args.surface:
        raise UsageError("geodesic needs --surface NAME or --network N")
    if args.surface not in surfaces.MODEL_NAMES:
        raise UsageError(f"unknown surface {args.surface!r}; expected one of {surfaces.MODEL_NAMES}")
    model = build_surface(args.surface)
    if args.label is None:
        print("labels:", ", ".join(sorted(model.catalog)))
        return 0
    if args.label not in model.catalog:
        raise UsageError(f"unknown label {args.label!r}; available: {sorted(model.catalog)}")
    value = catalog_value(model, args.label)
    count = unit_count(value)
    print(value.to_text())
    print(f"monomials (with multiplicity): {count}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(
                {"surface": args.surface, "label": args.label, "value": value.to_json(), "count": str(count)},
                fh,
                indent=2,
                sort_keys=True,
            )
            fh.write("\n")
    return 0


def cmd_evaluate(args) -> int:
    with open(args.point) as fh:
        raw = json.load(fh)
    try:
        point = {k: Fraction(v) for k, v in raw.items()}
    except (ValueError, TypeError) as exc:
        raise UsageError(f"{args.point}: point values must be exact rationals: {exc}") from exc
    if args.surface and args.label:
        model = build_surface(args.surface)
        if args.label not in model.catalog:
            raise UsageError(f"unknown label {args.label!r}")
        fn = catalog_value(model, args.label)
    elif args.fn:
        with open(args.fn) as fh:
            data = json.load(fh)
        seed = _load_seed(args.fn) if "vertices" in data else None
        if seed is not None:
            raise UsageError("--fn expects a serialized rational function, not a seed")
        from .laurent import GeneratorTable

        names = sorted(
            {k for part in ("num", "den") for entry in data[part] for k in entry["exps"]}
        )
        table = GeneratorTable(names)
        fn = RationalFn.from_json(table, data)
    else:
        raise UsageError("evaluate needs --surface NAME --label LBL or --fn FILE")
    missing = [n for n in fn.table.names if n not in point]
    if missing:
        raise UsageError(f"point is missing generators: {missing}")
    try:
        value = fn.evaluate(point)
    except SingularPointError as exc:
        print(f"singular point: denominator {exc.denominator.to_text()} vanishes", file=sys.stderr)
        return 1
    print(f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator))
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symgroupoid", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", help=f"one of {', '.join(SUITE_NAMES)} or 'all'")
    p.add_argument("--json", metavar="PATH", help="write the machine-readable report here")
    p.add_argument("--rng", type=int, default=DEFAULT_SEED, help="seed for randomized sampling")
    p.add_argument("--trials", type=int, default=5, help="trials for randomized equality")
    p.add_argument("--mode", choices=("symbolic", "randomized"), default="symbolic")
    p.add_argument("--tolerance", type=float, default=1e-9, help="residual tolerance (sl2 only)")
    p.add_argument("-n", "--size", type=int, help="restrict the casimirs suite to one size")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("mutate", help="apply a mutation sequence to a quiver/seed file")
    p.add_argument("--quiver", required=True, metavar="FILE")
    p.add_argument("--seq", default="", help="comma list of vertices; u~v swaps two labels")
    p.add_argument("--json", metavar="PATH", help="write the mutated seed here instead of stdout")
    p.set_defaults(handler=cmd_mutate)

    p = sub.add_parser("casimirs", help="print the Casimir monomial basis of a quiver")
    p.add_argument("--quiver", metavar="FILE")
    p.add_argument("--surface", metavar="NAME")
    p.set_defaults(handler=cmd_casimirs)

    p = sub.add_parser("geodesic", help="print a surface-model geodesic function")
    p.add_argument("--surface", metavar="NAME")
    p.add_argument("--label", metavar="LBL")
    p.add_argument("--network", type=int, metavar="N", help="dump the wire network instead")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(handler=cmd_geodesic)

    p = sub.add_parser("evaluate", help="exact evaluation at a rational point")
    p.add_argument("--point", required=True, metavar="FILE")
    p.add_argument("--surface", metavar="NAME")
    p.add_argument("--label", metavar="LBL")
    p.add_argument("--fn", metavar="FILE", help="serialized rational function")
    p.set_defaults(handler=cmd_evaluate)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
