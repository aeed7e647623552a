"""Command-line front end: ``skewgroth expand | product | perp | verify``.

Exit codes: 0 success, 1 verification failure, 2 parse error,
3 precondition violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .betapoly import BetaPoly
from .core import contains, size
from .grothendieck import G_schur, G_skew_double_det, G_skew_single, g_schur, g_skew_det
from .noncomm import (
    Expansion,
    SkewSum,
    expand_sG_double,
    expand_sG_single,
    expand_sg,
    minimal_r,
    perp_expand_G,
    perp_expand_g,
)
from .serialize import (
    ShapeError,
    expansion_to_json,
    expansion_to_latex,
    format_skew,
    parse_partition,
    parse_skew,
    symfunc_to_json,
    symfunc_to_latex,
)
from .symfunc import SymFunc
from .verify import SUITES, run_suite

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3


class PreconditionError(ValueError):
    """Well-formed input that violates a mathematical requirement."""


class _Parser(argparse.ArgumentParser):
    # argparse already exits with 2 on usage errors; keep that for our own
    # parse failures too
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_PARSE)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _shape(text: str):
    """Parse "a,b/c,d" without the containment check; that is a precondition (exit 3)."""
    return parse_skew(text, require_containment=False)


def _require_contained(outer, inner):
    if not contains(outer, inner):
        raise PreconditionError(f"inner shape {inner} is not contained in outer shape {outer}")


# -- computations ----------------------------------------------------------------


def schur_expansion(family: str, outer, inner, degree: int | None) -> SymFunc:
    """The Schur expansion printed by ``expand``."""
    _require_contained(outer, inner)
    if family in ("G", "g") and inner:
        raise PreconditionError(f"family {family} takes a straight shape, got {format_skew((outer, inner))}")
    if family in ("G", "G//", "G/"):
        D = degree if degree is not None else size(outer) + 2
        if D < 0:
            raise PreconditionError("the degree bound must be >= 0")
        if family == "G":
            return G_schur(outer, D)
        if family == "G//":
            return G_skew_double_det(outer, inner, D)
        return G_skew_single(outer, inner, D)
    f = g_schur(outer) if family == "g" else g_skew_det(outer, inner)
    return f.truncate_degree(degree) if degree is not None else f


def product_expansion(kind: str, nu, outer, inner, r=None, s=None) -> Expansion:
    r0, s0 = minimal_r(kind, nu, outer, inner)
    r = r0 if r is None else r
    s = s0 if s is None else s
    if kind == "sg":
        return expand_sg(nu, outer, inner, r)
    fn = expand_sG_double if kind == "sG//" else expand_sG_single
    return fn(nu, outer, inner, r, s)


def perp_expansion(kind: str, nu, outer, inner, r=None) -> Expansion:
    r = minimal_r("perp", nu, outer, inner)[0] if r is None else r
    return (perp_expand_G if kind == "sG" else perp_expand_g)(nu, outer, inner, r)


# -- output ------------------------------------------------------------------------


def _at_beta(c: BetaPoly, value: Fraction | None) -> BetaPoly:
    return c if value is None else BetaPoly(c.evaluate(value))


def _emit_symfunc(f: SymFunc, args, extra: dict) -> str:
    if args.beta_rational is not None:
        f = SymFunc({lam: _at_beta(c, args.beta_rational) for lam, c in f.items()}, f.bound)
    if args.latex:
        return symfunc_to_latex(f)
    payload = dict(extra)
    if args.beta_rational is not None:
        payload["beta"] = str(args.beta_rational)
    payload["degree_bound"] = f.bound
    payload["terms"] = symfunc_to_json(f)
    return json.dumps(payload)


def _emit_expansion(e: Expansion, args, extra: dict) -> str:
    if args.beta_rational is not None:
        terms = SkewSum(
            {shape: _at_beta(c, args.beta_rational) for shape, c in e.items()}, require_containment=False
        )
        e = Expansion(e.basis, terms, e.validity_mod)
    if args.latex:
        return expansion_to_latex(e)
    payload = dict(extra)
    if args.beta_rational is not None:
        payload["beta"] = str(args.beta_rational)
    payload.update(expansion_to_json(e))
    return json.dumps(payload)


# -- commands ------------------------------------------------------------------------


def cmd_expand(args) -> int:
    outer, inner = args.shape
    f = schur_expansion(args.family, outer, inner, args.degree)
    print(_emit_symfunc(f, args, {"family": args.family, "shape": format_skew((outer, inner))}))
    return EXIT_OK


def cmd_product(args) -> int:
    outer, inner = args.shape
    _require_contained(outer, inner)
    e = product_expansion(args.kind, args.nu, outer, inner, args.r, args.s)
    print(_emit_expansion(e, args, {"kind": args.kind}))
    return EXIT_OK


def cmd_perp(args) -> int:
    outer, inner = args.shape
    _require_contained(outer, inner)
    e = perp_expansion(args.kind, args.nu, outer, inner, args.r)
    print(_emit_expansion(e, args, {"kind": args.kind}))
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_suite(args.suite, args.max, args.degree, args.vars)
    ok = all(r.passed for r in results)
    if args.json:
        report = [
            {"check": r.name, "cases": r.checked, "failed": len(r.failures), "counterexamples": r.details()}
            for r in results
        ]
        print(json.dumps({"suite": args.suite, "passed": ok, "checks": report}))
    else:
        for r in results:
            print(r.line())
            for d in r.details():
                print(f"    counterexample: {d}")
        print("ALL PASS" if ok else "SOME CHECKS FAILED")
    return EXIT_OK if ok else EXIT_VERIFY


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except ShapeError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _shape_arg(text: str):
    try:
        return _shape(text)
    except ShapeError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="skewgroth", description="Exact skew Grothendieck expansions over Q[beta].")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def output_flags(p):
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", help="JSON output (default)")
        fmt.add_argument("--latex", action="store_true", help="LaTeX output")
        p.add_argument("--beta-rational", type=_fraction, metavar="P/Q",
                       help="substitute a rational value for beta before printing")

    p = sub.add_parser("expand", help="Schur expansion of G_lam, g_lam, G_{lam//mu}, G_{lam/mu} or g_{lam/mu}")
    p.add_argument("family", choices=["G", "g", "G//", "G/", "g/"])
    p.add_argument("shape", type=_shape_arg, help='partition "3,1", empty "-", or skew "3,1/1"')
    p.add_argument("--degree", type=int, help="x-degree bound D (G families default to |outer| + 2)")
    output_flags(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("product", help="expand s_nu times a skew function in the skew basis")
    p.add_argument("kind", choices=["sG//", "sG/", "sg"])
    p.add_argument("--nu", type=_partition_arg, default=())
    p.add_argument("--shape", type=_shape_arg, required=True)
    p.add_argument("--r", type=int, help="defaults to the smallest legal value")
    p.add_argument("--s", type=int, help="defaults to l(mu) (G kinds only)")
    output_flags(p)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("perp", help="expand s_nu^perp applied to a skew function")
    p.add_argument("kind", choices=["sG", "sg"])
    p.add_argument("--nu", type=_partition_arg, default=())
    p.add_argument("--shape", type=_shape_arg, required=True)
    p.add_argument("--r", type=int, help="defaults to l(lam)")
    output_flags(p)
    p.set_defaults(func=cmd_perp)

    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--max", type=_nonneg, default=4, help="largest partition size enumerated")
    p.add_argument("--degree", type=_nonneg, help="x-degree bound (default max + 2)")
    p.add_argument("--vars", type=_nonneg, default=3, help="variable count for the polynomial oracle")
    p.add_argument("--json", action="store_true", help="JSON report")
    p.set_defaults(func=cmd_verify)
    return parser


def _attach_dash_values(argv: list[str]) -> list[str]:
    """Values such as "-", "-/-" or "-1/2" start with a dash, which argparse would
    read as an option; glue them to their flag as --shape=-/-."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--nu", "--shape", "--beta-rational") and i + 1 < len(argv) and argv[i + 1].startswith("-") \
                and not argv[i + 1].startswith("--"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_attach_dash_values(argv))
    try:
        return args.func(args)
    except ShapeError as exc:
        print(f"skewgroth: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"skewgroth: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
