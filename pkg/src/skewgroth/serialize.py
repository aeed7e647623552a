"""Text, JSON and LaTeX forms of partitions, Schur expansions, skew-shape
expansions and polynomials."""

from __future__ import annotations

from fractions import Fraction

from .betapoly import BetaPoly
from .core import Partition, SkewShape, contains, make_partition
from .noncomm import Expansion, SkewSum
from .symfunc import SymFunc


class ShapeError(ValueError):
    """A partition or skew-shape string could not be parsed."""


# -- shapes --------------------------------------------------------------------


def parse_partition(text: str) -> Partition:
    """"3,1" -> (3, 1); "-" or "" -> ()."""
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError as exc:
        raise ShapeError(f"not a partition: {text!r}") from exc
    try:
        return make_partition(parts)
    except ValueError as exc:
        raise ShapeError(str(exc)) from exc


def parse_skew(text: str, require_containment: bool = True) -> SkewShape:
    """"3,1/1" -> ((3, 1), (1,)); a plain partition has empty inner shape."""
    if text.count("/") > 1:
        raise ShapeError(f"too many '/' in {text!r}")
    outer_text, _, inner_text = text.partition("/")
    outer, inner = parse_partition(outer_text), parse_partition(inner_text)
    if require_containment and not contains(outer, inner):
        raise ShapeError(f"inner shape {inner} is not contained in {outer}")
    return outer, inner


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam)) if lam else "-"


def format_skew(shape: SkewShape) -> str:
    outer, inner = shape
    return format_partition(outer) + ("/" + format_partition(inner) if inner else "")


# -- JSON ------------------------------------------------------------------------


def symfunc_to_json(f: SymFunc) -> list[dict]:
    """List of {outer, coeff} with coeff as [[beta_exp, numerator, denominator], ...]."""
    return [{"outer": list(lam), "coeff": c.to_triples()} for lam, c in f.items()]


def symfunc_from_json(data, bound: int | None = None) -> SymFunc:
    """Inverse of symfunc_to_json; also accepts the CLI envelope
    {"degree_bound": ..., "terms": [...]}."""
    if isinstance(data, dict):
        bound = data.get("degree_bound", bound)
        data = data["terms"]
    return SymFunc({tuple(t["outer"]): BetaPoly.from_triples(t["coeff"]) for t in data}, bound)


def skewsum_to_json(elt: SkewSum) -> list[dict]:
    return [
        {"outer": list(o), "inner": list(n), "coeff": c.to_triples()} for (o, n), c in elt.items()
    ]


def expansion_to_json(e: Expansion) -> dict:
    return {"basis": e.basis, "validity_mod": e.validity_mod, "terms": skewsum_to_json(e.terms)}


def expansion_from_json(data: dict) -> Expansion:
    terms = SkewSum(
        {(tuple(t["outer"]), tuple(t["inner"])): BetaPoly.from_triples(t["coeff"]) for t in data["terms"]},
        require_containment=False,
    )
    return Expansion(data["basis"], terms, data.get("validity_mod"))


def rational_triples(value: Fraction) -> list[list[int]]:
    """A rational number written as a constant coefficient."""
    value = Fraction(value)
    return [[0, value.numerator, value.denominator]] if value else []


# -- LaTeX -----------------------------------------------------------------------


def _latex_rational(v) -> str:
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    sign = "-" if v < 0 else ""
    return f"{sign}\\frac{{{abs(v.numerator)}}}{{{v.denominator}}}"


def latex_beta(c: BetaPoly) -> str:
    """LaTeX for a Q[beta] coefficient, e.g. 2\\beta^{2} - \\beta."""
    if not c:
        return "0"
    pieces = []
    for e, v in sorted(c.coeffs.items(), reverse=True):
        mono = "" if e == 0 else ("\\beta" if e == 1 else f"\\beta^{{{e}}}")
        if mono and v == 1:
            s = mono
        elif mono and v == -1:
            s = "-" + mono
        else:
            s = _latex_rational(v) + mono
        pieces.append(s)
    out = pieces[0]
    for p in pieces[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def _latex_partition(lam: Partition) -> str:
    return "(" + ",".join(map(str, lam)) + ")" if lam else "\\emptyset"


def _latex_sum(pairs: list[tuple[str, BetaPoly]]) -> str:
    if not pairs:
        return "0"
    out = []
    for symbol, c in pairs:
        text = latex_beta(c)
        if c == 1:
            term = symbol
        elif c == -1:
            term = "-" + symbol
        elif c.is_monomial():
            term = text + " " + symbol
        else:
            term = f"({text}) {symbol}"
        out.append(term)
    s = out[0]
    for t in out[1:]:
        s += " - " + t[1:] if t.startswith("-") else " + " + t
    return s


def symfunc_to_latex(f: SymFunc) -> str:
    body = _latex_sum([(f"s_{{{_latex_partition(lam)}}}", c) for lam, c in f.items()])
    if f.bound is not None:
        body += f" + O(\\deg > {f.bound})"
    return body


def skew_symbol(basis: str, outer: Partition, inner: Partition) -> str:
    letter = "g" if basis == "g" else "G"
    sep = "/\\!/" if basis == "G//" else "/"
    if not inner:
        return f"{letter}_{{{_latex_partition(outer)}}}"
    return f"{letter}_{{{_latex_partition(outer)}{sep}{_latex_partition(inner)}}}"


def expansion_to_latex(e: Expansion) -> str:
    body = _latex_sum([(skew_symbol(e.basis, o, n), c) for (o, n), c in e.items()])
    if e.validity_mod is not None:
        body += f" \\pmod{{I_{{{e.validity_mod}}}}}"
    return body
