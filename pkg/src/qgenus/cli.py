"""Command line surface: class group queries, series dumps, and the harness.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
Output is deterministic for a given invocation; timing appears only in the
"ms" field of verification reports.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .forms import QuadForm, compose, discriminant_info, reduce_form
from .genus import genus_partition
from .lambert import NAMED_SERIES, load_series_config, named_series_expand, rep_formula
from .series import theta_series
from .verify import run_all, REP_FORMULA_FORMS

DEFAULT_N = 1000


def parse_form(text: str) -> QuadForm:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected a,b,c but got {text!r}")
    try:
        return QuadForm(*(int(p) for p in parts))
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-integer coefficients in {text!r}")


def default_truncation(args) -> int:
    if args.truncation is not None:
        return args.truncation
    env = os.environ.get("QFORM_N")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return DEFAULT_N


def _emit_series(series, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(series.to_json_obj()))
    elif fmt == "csv":
        print("n,coeff")
        for n, c in enumerate(series.coeffs):
            print(f"{n},{c}")
    else:
        print("[" + ",".join(str(c) for c in series.coeffs) + "]")


def cmd_classgroup(args) -> int:
    delta = args.delta
    info = discriminant_info(delta)
    part = genus_partition(delta)
    if args.format == "json":
        obj = {
            "delta": delta,
            "h": info.class_number,
            "v": info.num_genera,
            "w": info.w,
            "fundamental": info.is_fundamental,
            "idoneal": info.is_idoneal,
            "characters": [c.label for c in part.characters],
            "genera": [
                {"vector": list(g.vector), "forms": [list(f) for f in g.forms]}
                for g in part.genera
            ],
        }
        print(json.dumps(obj))
    elif args.format == "csv":
        print("genus,a,b,c," + ",".join(c.label for c in part.characters))
        for i, g in enumerate(part.genera, start=1):
            for f in g.forms:
                print(f"G{i},{f.a},{f.b},{f.c}," + ",".join(f"{v:+d}" for v in g.vector))
    else:
        print(f"discriminant {delta}: h = {info.class_number}, v = {info.num_genera}, "
              f"w = {info.w}, fundamental = {info.is_fundamental}, idoneal = {info.is_idoneal}")
        print("characters: " + "  ".join(c.label for c in part.characters))
        for i, g in enumerate(part.genera, start=1):
            vec = " ".join(f"{v:+d}" for v in g.vector)
            forms = "  ".join(str(f) for f in g.forms)
            print(f"  G{i} <{vec}>  {forms}")
    return 0


def cmd_reduce(args) -> int:
    print(str(reduce_form(args.form)))
    return 0


def cmd_compose(args) -> int:
    print(str(compose(args.form1, args.form2)))
    return 0


def cmd_theta(args) -> int:
    series = theta_series(args.form, default_truncation(args))
    _emit_series(series, args.format)
    return 0


def cmd_repcount(args) -> int:
    from .forms import discriminant

    delta = args.delta
    f = args.form
    if discriminant(f) != delta:
        raise ValueError(f"{f} has discriminant {discriminant(f)}, not {delta}")
    n = args.n
    enumerated = theta_series(f, n)[n]
    formula = None
    if delta in REP_FORMULA_FORMS and n >= 1:
        formula = rep_formula(delta, f, n)
    if args.format == "json":
        print(json.dumps({"delta": delta, "form": list(f), "n": n,
                          "enumeration": enumerated, "formula": formula}))
    else:
        if formula is None:
            print(enumerated)
        else:
            print(f"enumeration {enumerated}  formula {formula}")
    return 0


def cmd_lambert(args) -> int:
    registry = NAMED_SERIES
    if args.config:
        registry = load_series_config(args.config)
    if args.name not in registry:
        known = ", ".join(sorted(registry))
        raise ValueError(f"unknown series {args.name!r}; known: {known}")
    series = named_series_expand(args.name, default_truncation(args), registry)
    _emit_series(series, args.format)
    return 0


def cmd_verify(args) -> int:
    pattern = None if args.all else args.filter
    if not args.all and not args.filter:
        pattern = None  # no filter means everything, same as --all
    n_override = args.truncation
    if n_override is None:
        env = os.environ.get("QFORM_N")
        if env:
            try:
                n_override = max(1, int(env))
            except ValueError:
                n_override = None

    def progress(rep):
        if args.format == "pretty":
            mark = {"pass": "ok", "fail": "FAIL", "skip": "skip"}[rep.status]
            extra = f"  first mismatch {rep.first_mismatch}" if rep.first_mismatch else ""
            print(f"{mark:>4}  {rep.case_id}  (N={rep.n}, {rep.ms:.1f} ms){extra}")
        elif args.format == "json":
            print(json.dumps(rep.to_json_obj()))
        else:
            mm = ";".join(map(str, rep.first_mismatch)) if rep.first_mismatch else ""
            print(f"{rep.case_id},{rep.status},{rep.n},{mm},{rep.ms:.3f}")

    if args.format == "csv":
        print("id,status,N,first_mismatch,ms")
    reports, code = run_all(pattern, n_override, deep=not args.quick, progress=progress)
    if code == 2:
        print(f"no cases match filter {pattern!r}", file=sys.stderr)
        return 2
    passed = sum(r.status == "pass" for r in reports)
    failed = sum(r.status == "fail" for r in reports)
    skipped = sum(r.status == "skip" for r in reports)
    print(f"{passed} passed, {failed} failed, {skipped} skipped", file=sys.stderr)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgenus",
        description="Binary quadratic forms, genus theory, and q-series identity checks. "
        "Negative discriminants parse as-is; use `--` before a bare negative "
        "argument if it is ever misread as a flag.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, truncation=True):
        if truncation:
            p.add_argument("-N", "--truncation", type=int, default=None,
                           help="series truncation (default 1000; env QFORM_N overrides)")
        p.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")

    p = sub.add_parser("classgroup", help="reduced forms, h, v, genus partition")
    p.add_argument("delta", type=int)
    add_common(p, truncation=False)
    p.set_defaults(func=cmd_classgroup)

    p = sub.add_parser("reduce", help="reduce a form")
    p.add_argument("form", type=parse_form)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("compose", help="Gauss composition of two classes")
    p.add_argument("form1", type=parse_form)
    p.add_argument("form2", type=parse_form)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("theta", help="theta series coefficients")
    p.add_argument("form", type=parse_form)
    add_common(p)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("repcount", help="representation count by enumeration and formula")
    p.add_argument("delta", type=int)
    p.add_argument("form", type=parse_form)
    p.add_argument("n", type=int)
    add_common(p, truncation=False)
    p.set_defaults(func=cmd_repcount)

    p = sub.add_parser("lambert", help="expand a named Lambert series")
    p.add_argument("name")
    p.add_argument("--config", help="JSON file of extra named series")
    add_common(p)
    p.set_defaults(func=cmd_lambert)

    p = sub.add_parser("verify", help="run the identity registry")
    p.add_argument("filter", nargs="?", default=None,
                   help="case id glob, e.g. 'sec2/*' or 'thm1/-3/*'")
    p.add_argument("--all", action="store_true", help="run every case")
    p.add_argument("--filter", dest="filter_opt", default=None, help=argparse.SUPPRESS)
    p.add_argument("--quick", action="store_true",
                   help="skip the per-discriminant structural sweeps")
    add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "filter_opt", None) and not getattr(args, "filter", None):
        args.filter = args.filter_opt
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
