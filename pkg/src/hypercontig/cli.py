"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 input or parse error,
3 inadmissible specialization.  The default output format comes from
``HYPERCONTIG_FORMAT`` (``text`` when unset).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
from fractions import Fraction

from . import __version__
from .errors import HypercontigError
from .exprio import pq_to_dict, print_expr, relation_to_dict, relation_to_latex
from .gauss_core import as_shift, gauss_relations

FORMAT_ENV = "HYPERCONTIG_FORMAT"
# shift triples such as -1,0,0 must not be mistaken for options
_NEGATIVE = re.compile(r"^-\d+$|^-\d*\.\d+$|^-\d+(,-?\d+)*$|^-\d+/\d+$")


def _shift_arg(text):
    try:
        return as_shift(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fraction_arg(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    default_format = os.environ.get(FORMAT_ENV, "text")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"), default=default_format)
    common.add_argument("--out", help="also write the JSON result to this path")

    parser = _Parser(prog="hypercontig", description="Contiguous relations of Gauss 2F1.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("pq", parents=[common], help="coefficients P, Q of a shift")
    for name in ("k", "l", "m"):
        p.add_argument(name, type=int)
    p.add_argument("--method", choices=("auto", "path", "dc", "negative"), default="auto")
    p.set_defaults(handler=cmd_pq)

    p = sub.add_parser("relation", parents=[common], help="three-term contiguous relation")
    for name in ("s1", "s2", "s3"):
        p.add_argument(name, type=_shift_arg, help="comma separated k,l,m")
    p.add_argument("--method", choices=("auto", "path", "dc", "negative"), default="auto")
    p.add_argument("--det", action="store_true", help="use the closed-form determinant")
    p.set_defaults(handler=cmd_relation)

    p = sub.add_parser("verify", help="symbolic and series verification suites")
    vsub = p.add_subparsers(dest="suite", required=True, parser_class=_Parser)
    t = vsub.add_parser("theorem", parents=[common])
    t.add_argument("--max-shift", type=int, default=3)
    t.add_argument("--seed", type=int, default=0)
    t.set_defaults(handler=cmd_verify_theorem)
    s = vsub.add_parser("series", parents=[common])
    s.add_argument("--trials", type=int, default=50)
    s.add_argument("--order", type=int, default=20)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--fresh", type=int, default=10, help="number of random relations to add")
    s.set_defaults(handler=cmd_verify_series)

    p = sub.add_parser("kummer", parents=[common], help="P(n), Q(n) and a float check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=_fraction_arg, default=Fraction(5, 3))
    p.add_argument("--b", type=_fraction_arg, default=Fraction(-1, 4))
    p.set_defaults(handler=cmd_kummer)

    p = sub.add_parser("classfn", parents=[common], help="equivalence class function")
    p.add_argument("--A")
    p.add_argument("--B")
    p.add_argument("--C")
    p.add_argument("--builtin", action="append", default=[], choices=("0f1-up", "0f1-down"))
    p.add_argument("--compare", action="store_true", help="compare the two given recurrences")
    p.set_defaults(handler=cmd_classfn)
    return parser


# -- handlers: each returns (exit_code, text, payload) ---------------------------


def cmd_pq(args):
    from .pq_engine import pq

    v = pq((args.k, args.l, args.m), args.method)
    payload = pq_to_dict(v)
    text = f"shift: {v.shift}\nP = {print_expr(v.p)}\nQ = {print_expr(v.q)}"
    return 0, text, payload


def cmd_relation(args):
    from .relation_builder import three_term, three_term_det

    build = three_term_det if args.det else three_term
    r = build(args.s1, args.s2, args.s3, method=args.method)
    payload = relation_to_dict(r)
    text = relation_to_latex(r) if args.format == "latex" else str(r)
    return 0, text, payload


def cmd_verify_theorem(args):
    from .verify import run_suite

    checks = run_suite(max_shift=args.max_shift, seed=args.seed)
    ok = all(c.passed for c in checks)
    payload = {
        "passed": ok,
        "checks": [
            {"name": c.name, "passed": c.passed, "cases": c.cases, "failures": c.failures[:5]}
            for c in checks
        ],
    }
    return (0 if ok else 1), "\n".join(c.line() for c in checks), payload


def series_relations(fresh: int = 10, seed: int = 0) -> list:
    """Built-in Gauss relations plus ``fresh`` random three-term relations."""
    from .relation_builder import three_term

    out = [(f"gauss {i}", r) for i, r in enumerate(gauss_relations())]
    rng = random.Random(seed)
    while len(out) < len(gauss_relations()) + fresh:
        shifts = {tuple(rng.randint(-2, 2) for _ in range(3)) for _ in range(3)}
        if len(shifts) < 3:
            continue
        s1, s2, s3 = sorted(shifts)
        out.append((" ".join(str(as_shift(s)) for s in (s1, s2, s3)), three_term(s1, s2, s3)))
    return out


def cmd_verify_series(args):
    from .series_oracle import check_relation_random

    rows, lines = [], []
    ok = True
    for i, (label, r) in enumerate(series_relations(args.fresh, args.seed)):
        verdicts = check_relation_random(r, trials=args.trials, seed=args.seed * 1000 + i, order=args.order)
        bad = [v for v in verdicts if not v.passed]
        ok = ok and not bad
        rows.append({"relation": label, "trials": len(verdicts), "failed": len(bad)})
        lines.append(f"{'PASS' if not bad else 'FAIL'} {label}: {len(verdicts) - len(bad)}/{len(verdicts)}")
    return (0 if ok else 1), "\n".join(lines), {"passed": ok, "relations": rows}


def cmd_kummer(args):
    from .special_evals import gkummer_check, kummer_coeffs

    co = kummer_coeffs(args.n)
    verdict = gkummer_check(args.n, args.a, args.b)
    payload = {
        "n": args.n,
        "P": print_expr(co.p_of_n),
        "Q": print_expr(co.q_of_n),
        "check": {
            "a": str(args.a),
            "b": str(args.b),
            "lhs": verdict.lhs,
            "rhs": verdict.rhs,
            "rel_error": verdict.rel_error,
            "passed": verdict.passed,
        },
    }
    text = "\n".join(
        [
            f"P({args.n}) = {payload['P']}",
            f"Q({args.n}) = {payload['Q']}",
            f"check at a={args.a}, b={args.b}: lhs={verdict.lhs!r} rhs={verdict.rhs!r} "
            f"rel_error={verdict.rel_error:.3g} {'PASS' if verdict.passed else 'FAIL'}",
        ]
    )
    return (0 if verdict.passed else 1), text, payload


def cmd_classfn(args):
    from .errors import ParseError
    from .recurrence_classes import Recurrence, builtin, class_function, normalize_z, same_class

    recs = [builtin(name) for name in args.builtin]
    given = [x is not None for x in (args.A, args.B, args.C)]
    if any(given):
        if not all(given):
            raise ParseError("--A, --B and --C must be given together")
        recs.append(Recurrence.parse(args.A, args.B, args.C, "user"))
    if not recs:
        raise ParseError("give --A/--B/--C or --builtin")
    if args.compare:
        if len(recs) != 2:
            raise ParseError("--compare needs exactly two recurrences")
        same = same_class(*recs)
        rows = [{"name": r.name, "class_function": print_expr(class_function(r).value)} for r in recs]
        text = "\n".join(f"{r['name']}: {r['class_function']}" for r in rows) + f"\nsame class: {str(same).lower()}"
        return 0, text, {"recurrences": rows, "same_class": same}
    rows = [
        {
            "name": r.name,
            "class_function": print_expr(class_function(r).value),
            "normalized_H": print_expr(normalize_z(r)),
        }
        for r in recs
    ]
    text = "\n".join(f"{r['name']}: class function {r['class_function']}; H(n) = {r['normalized_H']}" for r in rows)
    return 0, text, {"recurrences": rows}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, text, payload = args.handler(args)
    except HypercontigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
