"""Command-line surface: decompose, verify, scan, resume, count,
exceptions, hypothesis.

Exit codes: 0 success, 1 counterexample or mismatch found, 2 usage error,
3 internal error.  Reports go to stdout, progress to stderr.  Relative
checkpoint paths resolve under FOURSQ_CHECKPOINT_DIR when it is set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from .constraint import parse_constraint
from .constructive import (TheoremFamily, all_families, construct,
                           parse_family)
from .errors import DslSyntaxError, FourSquareError
from .families import FAMILIES, get_family
from .quad_enum import DedupRule, count_constrained, find_constrained
from .scanner import ScanConfig, ScanReport, resume, scan, verify_hypothesis
from .ternary import Membership, TernaryForm, exception_membership

EXIT_OK = 0
EXIT_FOUND = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

# hypotheses whose exceptions are expected, up to a known ceiling
_HYPOTHESIS_CEILING = {"ramanujan_1_1_10": 2719,
                       "containment_1_4": -1, "thm13iii_form": -1}


def _checkpoint_path(name: Optional[str]) -> Optional[str]:
    if name is None:
        return None
    base = os.environ.get("FOURSQ_CHECKPOINT_DIR")
    if base and not os.path.isabs(name):
        return os.path.join(base, name)
    return name


def _format_decompose(family: TheoremFamily, n: int, result) -> str:
    values, witness = result
    if family.kind == "t11":
        x, y, z, w = values
        m = family["m"]
        return f"{n} = {x}^{m} + {y}^2 + {z}^2 + {w}^2"
    if family.kind == "t12v":
        k, x, y, z = values
        return f"{n} = 4^{k}*(1 + 4*{x}^2 + {y}^2) + {z}^2"
    terms = " + ".join(f"({v})^2" if v < 0 else f"{v}^2" for v in values)
    return (f"{n} = {terms}"
            f"  [witness {witness.kind}"
            + (f" t={witness.t}" if witness.t is not None else "")
            + (f" hyp={witness.hypotenuse}"
               if witness.hypotenuse is not None else "") + "]")


def _cmd_decompose(args) -> int:
    family = parse_family(args.family)
    result = construct(family, args.n)
    if args.json:
        values, witness = result
        print(json.dumps({"family": family.id, "n": args.n,
                          "values": list(values),
                          "witness": {"kind": witness.kind, "t": witness.t,
                                      "hypotenuse": witness.hypotenuse}},
                         sort_keys=True))
    else:
        print(_format_decompose(family, args.n, result))
    return EXIT_OK


def _cmd_verify(args) -> int:
    spec = parse_constraint(args.spec)
    found = find_constrained(args.n, spec)
    if found is None:
        if args.json:
            print(json.dumps({"n": args.n, "spec": args.spec,
                              "witness": None}, sort_keys=True))
        else:
            print(f"{args.n}: no witness")
        return EXIT_FOUND
    rep, witness = found
    if args.json:
        print(json.dumps({"n": args.n, "spec": args.spec,
                          "rep": list(rep),
                          "witness": {"kind": witness.kind, "t": witness.t,
                                      "hypotenuse": witness.hypotenuse}},
                         sort_keys=True))
    else:
        terms = " + ".join(f"({v})^2" if v < 0 else f"{v}^2" for v in rep)
        print(f"{args.n} = {terms}"
              f"  (x,y,z,w)=({rep.x},{rep.y},{rep.z},{rep.w})")
    return EXIT_OK


def _scan_config(args) -> ScanConfig:
    if args.family:
        fam = get_family(args.family)
        specs = fam.specs
        lo = fam.lo if args.lo is None else args.lo
        exclusions = fam.exclusions if args.exclusions is None \
            else args.exclusions
    else:
        if not args.spec:
            raise SystemExit(EXIT_USAGE)
        specs = tuple(args.spec)
        lo = args.lo or 0
        exclusions = args.exclusions
    if args.hi is None:
        raise SystemExit(EXIT_USAGE)
    return ScanConfig(specs, lo, args.hi, args.chunk, exclusions)


def _emit_report(report: ScanReport, as_json: bool) -> int:
    if as_json:
        print(report.to_json())
    else:
        print(f"range [{report.range[0]}, {report.range[1]})  "
              f"checked {report.checked}  "
              f"counterexamples {report.counterexamples}  "
              f"complete {report.complete}")
    return EXIT_FOUND if report.counterexamples else EXIT_OK


def _cmd_scan(args) -> int:
    config = _scan_config(args)
    report = scan(config, _checkpoint_path(args.checkpoint),
                  workers=args.workers, progress=not args.quiet)
    return _emit_report(report, args.json)


def _cmd_resume(args) -> int:
    config = _scan_config(args)
    report = resume(_checkpoint_path(args.checkpoint), config,
                    workers=args.workers, progress=not args.quiet)
    return _emit_report(report, args.json)


def _cmd_count(args) -> int:
    spec = parse_constraint(args.spec)
    value = count_constrained(args.n, spec, DedupRule(args.dedup))
    if args.json:
        print(json.dumps({"n": args.n, "spec": args.spec,
                          "dedup": args.dedup, "count": value},
                         sort_keys=True))
    else:
        print(value)
    return EXIT_OK


def _cmd_exceptions(args) -> int:
    try:
        a, b, c = (int(v) for v in args.form.split(","))
    except ValueError:
        raise SystemExit(EXIT_USAGE)
    membership = exception_membership(TernaryForm(a, b, c), args.n)
    if args.json:
        print(json.dumps({"form": [a, b, c], "n": args.n,
                          "membership": membership.value}, sort_keys=True))
    else:
        print(membership.value)
    return EXIT_OK


def _cmd_hypothesis(args) -> int:
    exceptions = verify_hypothesis(args.name, args.bound)
    ceiling = _HYPOTHESIS_CEILING.get(args.name, -1)
    violations = [e for e in exceptions if e > ceiling]
    if args.json:
        print(json.dumps({"name": args.name, "bound": args.bound,
                          "exceptions": exceptions,
                          "violations": violations}, sort_keys=True))
    else:
        print(f"exceptions {exceptions}")
    return EXIT_FOUND if violations else EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foursq",
        description="four-square representations with constraints")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("decompose", help="constructive decomposition")
    p.add_argument("--family", required=True,
                   help="family id, e.g. t11:a=1,m=4 "
                        f"(one of {len(list(all_families()))} instances)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("verify", help="search one n against a spec")
    p.add_argument("--spec", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    for verb in ("scan", "resume"):
        p = sub.add_parser(verb, help=f"{verb} a range scan")
        p.add_argument("--spec", action="append", default=[])
        p.add_argument("--family", choices=sorted(FAMILIES), default=None)
        p.add_argument("--from", dest="lo", type=int, default=None)
        p.add_argument("--to", dest="hi", type=int, default=None)
        p.add_argument("--chunk", type=int, default=1000)
        p.add_argument("--exclusions", default=None)
        p.add_argument("--checkpoint",
                       required=(verb == "resume"), default=None)
        p.add_argument("--workers", type=int,
                       default=os.cpu_count() or 1)
        p.add_argument("--json", action="store_true")
        p.add_argument("--quiet", action="store_true")
        p.set_defaults(func=_cmd_scan if verb == "scan" else _cmd_resume)

    p = sub.add_parser("count", help="count satisfying representations")
    p.add_argument("--spec", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dedup", choices=[r.value for r in DedupRule],
                   default="ordered")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("exceptions", help="exception-set membership")
    p.add_argument("--form", required=True, help="a,b,c")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_exceptions)

    p = sub.add_parser("hypothesis", help="named hypothesis sweep")
    p.add_argument("--name", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_hypothesis)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except (DslSyntaxError, KeyError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, FourSquareError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())
