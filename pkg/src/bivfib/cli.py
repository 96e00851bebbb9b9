"""Command line entry point: ``bivfib triangle|seq|ztransform|check|derive``.

Exit status: 0 on success, 1 when an identity or verification fails, 2 on a
usage error (bad flags, unknown identity id, malformed grid, pole at y = 0).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from .fibopoly import DegenerateDenominator, fibopolynomial, gibopolynomial, triangle
from .identities import GridError, UnknownIdentity, check_many, derivative_formulas, ids_in_block, parse_grid, registry
from .polyring import BiPoly, PoleAtZero
from .sequences import FIB, LUCAS, GibSpec, kind_term, product_term
from .ztransform import (
    NonUnitLeading,
    verify_zrat,
    z_fib,
    z_fibopoly,
    z_gib_product,
    z_lucas,
    z_product,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    if not re.fullmatch(r"\s*-?\d+(\s*/\s*-?\d+)?\s*", text):
        raise argparse.ArgumentTypeError(f"expected an integer or a/b, got {text!r}")
    try:
        return Fraction(text.replace(" ", ""))
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError(f"zero denominator in {text!r}") from None


def _poly(text: str) -> BiPoly:
    try:
        return BiPoly.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _factors(text: str) -> List[tuple]:
    out = []
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        parts = chunk.split(",")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(f"factor {chunk!r} must be t,m,k")
        try:
            t, m, k = (int(p) for p in parts)
        except ValueError:
            raise argparse.ArgumentTypeError(f"factor {chunk!r} must hold integers") from None
        if t < 0 or k < 0:
            raise argparse.ArgumentTypeError(f"factor {chunk!r}: t and k must be >= 0")
        out.append((t, m, k))
    if not out:
        raise argparse.ArgumentTypeError("no factors given")
    return out


def _fmt_value(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return str(v)


def _emit(args, text_lines: Sequence[str], payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=None, ensure_ascii=False))
    else:
        for line in text_lines:
            print(line)


def _specialize(args, value):
    if args.x is None and args.y is None:
        return value
    if args.x is None or args.y is None:
        raise UsageError("--x and --y must be given together")
    return value.evaluate(args.x, args.y)


def _spec(args) -> Optional[GibSpec]:
    if args.g0 is None and args.g1 is None:
        return None
    return GibSpec(args.g0 if args.g0 is not None else BiPoly(), args.g1 if args.g1 is not None else BiPoly(), "G")


# -- subcommands -------------------------------------------------------------


def cmd_triangle(args) -> int:
    rows = triangle(args.s, args.rows)
    shown = [[_specialize(args, c) for c in row] for row in rows]
    lines = [" | ".join(_fmt_value(c) for c in row) for row in shown]
    _emit(args, lines, {"s": args.s, "rows": [[_fmt_value(c) for c in row] for row in shown]})
    return EXIT_OK


def _seq_term(args, n: int):
    s, m, t = args.s, args.m, args.t
    if args.kind == "fib":
        return kind_term("F", t * s * n + m)
    if args.kind == "lucas":
        return kind_term("L", t * s * n + m)
    if args.kind == "gib":
        spec = _spec(args)
        if spec is None:
            raise UsageError("seq gib needs --g0 and --g1")
        return kind_term(spec, t * s * n + m)
    if args.kind == "product":
        if args.factors is None:
            raise UsageError("seq product needs --factors")
        return product_term(s, args.factors, n, _spec(args) or FIB)
    if args.p is None:
        raise UsageError(f"seq {args.kind} needs --p")
    if args.kind == "fibopoly":
        return fibopolynomial(s, n + m, args.p)
    if args.kind == "lucapoly":
        return gibopolynomial(LUCAS, s, n + m, args.p)
    spec = _spec(args)
    if spec is None:
        raise UsageError("seq gibopoly needs --g0 and --g1")
    return gibopolynomial(spec, s, n + m, args.p)


def cmd_seq(args) -> int:
    terms = [_specialize(args, _seq_term(args, n)) for n in range(args.count)]
    shown = [_fmt_value(v) for v in terms]
    specialized = args.x is not None
    lines = ([" ".join(shown)] if shown else []) if specialized else shown
    _emit(args, lines, {"kind": args.kind, "s": args.s, "terms": shown})
    return EXIT_OK


def cmd_ztransform(args) -> int:
    s = args.s
    spec = _spec(args)
    if args.kind == "fib":
        zr, seq = z_fib(s, args.m), (lambda n: kind_term("F", s * n + args.m))
    elif args.kind == "lucas":
        zr, seq = z_lucas(s, args.m), (lambda n: kind_term("L", s * n + args.m))
    elif args.kind == "fibopoly":
        if args.p is None:
            raise UsageError("ztransform fibopoly needs --p")
        if not 0 <= args.shift <= args.p:
            raise UsageError("--shift must lie in 0..p")
        zr, seq = z_fibopoly(s, args.p, args.shift), (lambda n: fibopolynomial(s, n + args.shift, args.p))
    else:
        if args.factors is None:
            raise UsageError("ztransform product needs --factors")
        fac = args.factors
        if spec is None:
            zr, seq = z_product(s, fac), (lambda n: product_term(s, fac, n))
        else:
            zr, seq = z_gib_product(s, spec, fac), (lambda n: product_term(s, fac, n, spec))
    ok = verify_zrat(zr, seq, extra=args.extra)
    lines = [f"num: {zr.num}", f"den: {zr.den}", f"verified: {'yes' if ok else 'NO'} (extra={args.extra})"]
    payload = {"num": str(zr.num), "den": str(zr.den), "transform": zr.to_json(), "verified": ok, "extra": args.extra}
    _emit(args, lines, payload)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_check(args) -> int:
    if args.all:
        ids = list(registry())
        if args.block:
            ids = ids_in_block(args.block)
    elif args.ids:
        ids = args.ids
    else:
        raise UsageError("give identity ids or --all")
    if args.block and not args.all:
        raise UsageError("--block requires --all")
    if not ids:
        raise UsageError(f"no identities in block {args.block!r}")
    known = registry()
    missing = [i for i in ids if i not in known]
    if missing:
        raise UsageError(f"unknown identity id(s): {', '.join(missing)}")
    grid = parse_grid(args.grid) if args.grid else {}
    if grid and not args.all:
        for i in ids:
            extra = set(grid) - set(known[i].grid)
            if extra:
                raise UsageError(f"{i} has no parameter(s) {sorted(extra)}; known: {list(known[i].grid)}")
    reports = check_many(ids, grid, jobs=args.jobs)
    good = all(r.ok for r in reports)
    failing = sum(1 for r in reports if not r.ok)
    lines = [r.line() for r in reports]
    lines.append(f"{len(reports) - failing}/{len(reports)} identities ok")
    _emit(args, lines, {"ok": good, "reports": [r.to_json() for r in reports]})
    return EXIT_OK if good else EXIT_FAIL


def cmd_derive(args) -> int:
    rows, payload, good = [], [], True
    for n in range(args.n + 1) if args.upto else [args.n]:
        lhs, rhs = derivative_formulas(args.s, args.p, args.axis, n)
        same = lhs == rhs
        good = good and same
        label = f"d/d{args.axis} C({n if args.axis == 'x' else n + 1},{args.p})_F{args.s}"
        rows.append(f"n={n}  {'equal' if same else 'DIFFER'}  {label} = {lhs}")
        payload.append({"n": n, "lhs": str(lhs), "rhs": str(rhs), "equal": same})
    _emit(args, rows, {"s": args.s, "p": args.p, "axis": args.axis, "results": payload})
    return EXIT_OK if good else EXIT_FAIL


# -- parser ------------------------------------------------------------------


def _global_flags(parser: argparse.ArgumentParser, default) -> None:
    parser.add_argument("--format", choices=("text", "json"), default=default("text"), help="output format")
    parser.add_argument("--jobs", type=_positive, default=default(1), help="worker processes for grid checks")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bivfib", description="Bivariate Fibonacci polynomials, s-Fibopolynomials and their Z-transforms.")
    _global_flags(parser, lambda v: v)
    shared = argparse.ArgumentParser(add_help=False)
    _global_flags(shared, lambda v: argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def point(p):
        p.add_argument("--x", type=_rational, help="specialize x (integer or a/b)")
        p.add_argument("--y", type=_rational, help="specialize y (integer or a/b)")

    def seeds(p):
        p.add_argument("--g0", type=_poly, help="Gibonacci seed G_0, e.g. 'x + 1'")
        p.add_argument("--g1", type=_poly, help="Gibonacci seed G_1")

    p = sub.add_parser("triangle", parents=[shared], help="triangle of s-Fibopolynomials")
    p.add_argument("--s", type=_positive, default=1)
    p.add_argument("--rows", type=_nonneg, required=True)
    point(p)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("seq", parents=[shared], help="list terms of a sequence")
    p.add_argument("kind", choices=("fib", "lucas", "gib", "product", "fibopoly", "lucapoly", "gibopoly"))
    p.add_argument("--s", type=_positive, default=1)
    p.add_argument("--m", type=int, default=0, help="index offset")
    p.add_argument("--t", type=_nonneg, default=1, help="stride multiplier (term t*s*n + m)")
    p.add_argument("--p", type=_nonneg, help="lower index for the *poly kinds")
    p.add_argument("--count", type=_nonneg, default=10)
    p.add_argument("--factors", type=_factors, help="'t,m,k;t,m,k' for kind product")
    point(p)
    seeds(p)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("ztransform", parents=[shared], help="build and verify a Z-transform")
    p.add_argument("kind", choices=("fib", "lucas", "fibopoly", "product"))
    p.add_argument("--s", type=_positive, default=1)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--p", type=_nonneg)
    p.add_argument("--shift", type=_nonneg, default=0, help="transform of C(n+shift, p)")
    p.add_argument("--factors", type=_factors, help="'t,m,k;t,m,k'")
    p.add_argument("--extra", type=_nonneg, default=6, help="extra terms checked beyond the denominator degree")
    seeds(p)
    p.set_defaults(func=cmd_ztransform)

    p = sub.add_parser("check", parents=[shared], help="run registered identities")
    p.add_argument("ids", nargs="*", metavar="ID")
    p.add_argument("--all", action="store_true", help="run every registered identity")
    p.add_argument("--block", help="with --all, only ids whose first number is this")
    p.add_argument("--grid", action="append", help="override, e.g. 'm=-2..2;n=0,3'")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("derive", parents=[shared], help="compare a Fibopolynomial derivative with its convolution formula")
    p.add_argument("--s", type=_positive, default=1)
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--axis", choices=("x", "y"), default="x")
    p.add_argument("--n", type=_nonneg, default=4)
    p.add_argument("--upto", action="store_true", help="run every n from 0 to --n")
    p.set_defaults(func=cmd_derive)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GridError, UnknownIdentity, PoleAtZero) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"bivfib {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except (NonUnitLeading, DegenerateDenominator) as exc:
        print(f"bivfib {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
