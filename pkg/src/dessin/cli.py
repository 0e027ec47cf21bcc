"""Command-line interface.

Exit codes: 0 on success or agreement, 1 when a verification or comparison
fails, 2 for usage and parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .catalog import MISMATCH, build_catalog, compare_with_paper, format_report, render_table
from .enumeration import BoundExceeded, enumerate_trees, goulden_jackson
from .invariants import invariant_vector
from .poly import (
    DivisionByZeroPoly,
    NotASquare,
    PolySyntaxError,
    ShabatError,
    critical_values,
    format_poly,
    parse_poly,
    poly_sqrt,
    verify_power,
    verify_shabat,
)
from .tree import Passport, PlaneTree, TreeError, automorphism_order, canonical_form

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    """Bad input to a flag; reported with exit code 2."""

    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


def fmt(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _passport(text: str, flag: str = "--passport") -> Passport:
    try:
        return Passport.parse(text)
    except ValueError as exc:
        raise UsageError(flag, str(exc)) from None


def _poly(text: str, flag: str):
    try:
        return parse_poly(text)
    except (PolySyntaxError, DivisionByZeroPoly) as exc:
        raise UsageError(flag, str(exc)) from None


def _rational(text: str, flag: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(flag, f"expected a rational a/b, got {text!r}") from None


def _tree(text: str) -> PlaneTree:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError("--tree", f"invalid JSON: {exc}") from None
    # accept the records printed by `enumerate --format json` as well
    if isinstance(data, dict) and "tree" in data:
        data = data["tree"]
    if not isinstance(data, dict) or not {"n", "white", "black"} <= data.keys():
        raise UsageError("--tree", 'expected {"n": N, "white": [...], "black": [...]}')
    try:
        return PlaneTree.from_json(data)
    except (TreeError, TypeError, ValueError) as exc:
        raise UsageError("--tree", f"{type(exc).__name__}: {exc}") from None


# each command returns (exit code, json payload, text)


def cmd_enumerate(args):
    passport = _passport(args.passport) if args.passport else None
    try:
        buckets = enumerate_trees(args.edges, passport)
    except BoundExceeded as exc:
        raise UsageError("--edges", str(exc)) from None
    except ValueError as exc:
        raise UsageError("--passport", str(exc)) from None
    payload = []
    rows = []
    for b in buckets:
        trees = [
            {"canonical_key": canonical_form(t).hex(), "aut": automorphism_order(t), "tree": t.to_json()}
            for t in b.trees
        ]
        payload.append({"passport": str(b.passport), "w": fmt(b.weighted_sum), "trees": trees})
        rows.append([str(b.passport), str(len(b)), fmt(b.weighted_sum)])
    text = render_table(["passport", "trees", "w"], rows)
    text += f"\n{len(buckets)} types, {sum(len(b) for b in buckets)} trees\n"
    return OK, payload, text


def cmd_gj(args):
    w = goulden_jackson(_passport(args.passport))
    return OK, {"passport": str(_passport(args.passport)), "w": fmt(w)}, fmt(w) + "\n"


def cmd_invariants(args):
    tree = _tree(args.tree)
    vec = invariant_vector(tree)
    payload = {"passport": str(tree.passport), "canonical_key": canonical_form(tree).hex()}
    payload.update(vec.to_json())
    lines = [f"{k}: {v}" for k, v in [
        ("passport", payload["passport"]),
        ("canonical_key", payload["canonical_key"]),
        ("aut", vec.aut_order),
        ("rot_order", vec.rot_order),
        ("primitive", vec.primitive),
        ("reductions", ", ".join(map(str, vec.reductions)) or "none"),
        ("power_bases", ", ".join(f"{k}:{b}" for k, b in vec.power_bases) or "none"),
    ]]
    return OK, payload, "\n".join(lines) + "\n"


def cmd_catalog(args):
    if args.compare_paper and args.edges != 10:
        raise UsageError("--compare-paper", "reference data exists only for --edges 10")
    try:
        report = build_catalog(args.edges, with_polynomials=args.compare_paper)
    except BoundExceeded as exc:
        raise UsageError("--edges", str(exc)) from None
    payload = report.to_json()
    if args.compare_paper:
        found = compare_with_paper(report)
        payload["discrepancies"] = [d.to_json() for d in found]
        code = FAILED if found else OK
    else:
        found = None
        code = FAILED if any(r.status == MISMATCH for r in report.rows) else OK
    return code, payload, format_report(report, found)


def cmd_shabat_verify(args):
    p = _poly(args.poly, "--poly")
    c = None
    if args.critical_value is not None:
        c = _rational(args.critical_value, "--critical-value")
        if c == 0:
            raise UsageError("--critical-value", "must be nonzero")
    try:
        cert = verify_shabat(p, c)
    except ShabatError as exc:
        payload = {"poly": format_poly(p), "shabat": False, "error": type(exc).__name__, "message": str(exc)}
        if p.degree >= 2:
            cv = critical_values(p)
            payload["rational_critical_values"] = [fmt(v) for v in cv.values]
            payload["all_rational"] = cv.all_rational
        return FAILED, payload, f"{type(exc).__name__}: {exc}\n"
    payload = {"poly": format_poly(p), "shabat": True}
    payload.update(cert.to_json())
    payload["colors_swapped"] = cert.swapped
    text = (
        f"Shabat polynomial of degree {p.degree}\n"
        f"critical values: 0, {fmt(cert.c)}\n"
        f"roots of p:     {','.join(map(str, cert.white_profile))}\n"
        f"roots of p - c: {','.join(map(str, cert.black_profile))}\n"
        f"passport: {cert.passport}\n"
    )
    return OK, payload, text


def cmd_shabat_sqrt(args):
    p = _poly(args.poly, "--poly")
    try:
        q = poly_sqrt(p)
    except NotASquare as exc:
        return FAILED, {"poly": format_poly(p), "square": False, "message": str(exc)}, f"NotASquare: {exc}\n"
    return OK, {"poly": format_poly(p), "square": True, "sqrt": format_poly(q)}, format_poly(q) + "\n"


def cmd_shabat_power(args):
    if args.exponent < 2:
        raise UsageError("--exponent", "must be at least 2")
    q = _poly(args.base, "--base")
    p = _poly(args.target, "--target")
    holds = verify_power(p, q, args.exponent)
    payload = {"base": format_poly(q), "exponent": args.exponent, "target": format_poly(p), "holds": holds}
    text = f"target {'=' if holds else '!='} base^{args.exponent}\n"
    return (OK if holds else FAILED), payload, text


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(self.prog, message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default="table")
    common.add_argument("--output", metavar="PATH", help="write the result here instead of stdout")

    parser = _Parser(prog="dessin", description="Plane bicolored trees and Shabat polynomials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", parents=[common], help="list tree types with n edges")
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--passport", help='restrict to one type, e.g. "6,2,2|2,2,1,1,1,1,1,1"')
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("gj", parents=[common], help="Goulden-Jackson weighted count of a type")
    p.add_argument("--passport", required=True)
    p.set_defaults(func=cmd_gj)

    p = sub.add_parser("invariants", parents=[common], help="invariant vector of one tree")
    p.add_argument("--tree", required=True, help='{"n": N, "white": [...], "black": [...]}')
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("catalog", parents=[common], help="regenerate the catalog of types")
    p.add_argument("--edges", type=int, default=10)
    p.add_argument("--compare-paper", action="store_true", help="compare with the embedded reference data")
    p.set_defaults(func=cmd_catalog)

    sh = sub.add_parser("shabat", help="Shabat polynomial checks")
    shsub = sh.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = shsub.add_parser("verify", parents=[common])
    p.add_argument("--poly", required=True)
    p.add_argument("--critical-value", help="second critical value a/b; discovered when omitted")
    p.set_defaults(func=cmd_shabat_verify)
    p = shsub.add_parser("sqrt", parents=[common])
    p.add_argument("--poly", required=True)
    p.set_defaults(func=cmd_shabat_sqrt)
    p = shsub.add_parser("power", parents=[common])
    p.add_argument("--base", required=True)
    p.add_argument("--exponent", type=int, required=True)
    p.add_argument("--target", required=True)
    p.set_defaults(func=cmd_shabat_power)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        code, payload, text = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except SystemExit as exc:
        # --help
        return exc.code if isinstance(exc.code, int) else USAGE
    out = json.dumps(payload, indent=2) + "\n" if args.format == "json" else text
    if args.output:
        try:
            with open(args.output, "w") as fh:
                fh.write(out)
        except OSError as exc:
            print(f"error: --output: {exc}", file=sys.stderr)
            return USAGE
    else:
        sys.stdout.write(out)
    return code


def main(argv=None) -> int:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
