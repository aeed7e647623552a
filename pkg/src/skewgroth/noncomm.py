"""Operators u, v, U, V on the free module of skew shapes, the
non-commutative (super)symmetric Schur functions built from them, and the
expansion algorithms for s_nu G_{lam//mu}, s_nu G_{lam/mu}, s_nu g_{lam/mu}
and for s_nu^perp applied to G_{lam/mu} and g_{lam/mu}.

Words are applied rightmost factor first: u_a u_b . x = u_a . (u_b . x).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .betapoly import ONE, ZERO, BetaPoly, neg_beta_power
from .core import (
    Partition,
    SkewShape,
    column_word,
    conjugate,
    contains,
    enumerate_ssyt,
    length,
    make_partition,
    part,
    prefix_min_closure,
    skew_key,
    size,
    subpartitions,
    suffix_max_closure,
)
from .symfunc import SymFunc, skew_schur_at_negbeta, zero

FAMILIES = ("u", "v", "U", "V")
# families whose tableaux use the primed alphabet 1' > 2' > 3' > ...
PRIMED = frozenset({"U", "V"})


class SkewSum:
    """A finite Q[beta]-combination of skew shapes (outer, inner).

    Normally inner lies inside outer.  The unguarded transposed action can
    also produce pairs without containment; build those with
    ``require_containment=False``.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[SkewShape, BetaPoly | int] | None = None,
                 require_containment: bool = True):
        t: dict[SkewShape, BetaPoly] = {}
        for (outer, inner), c in (terms or {}).items():
            key = (make_partition(outer), make_partition(inner))
            if require_containment and not contains(key[0], key[1]):
                raise ValueError(f"inner {key[1]} is not contained in outer {key[0]}")
            c = c if isinstance(c, BetaPoly) else BetaPoly(c)
            if c:
                t[key] = t[key] + c if key in t else c
        self._terms = {k: v for k, v in t.items() if v}

    @classmethod
    def _raw(cls, terms: dict) -> SkewSum:
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def basis(cls, outer, inner=()) -> SkewSum:
        return cls({(outer, inner): ONE})

    @property
    def terms(self) -> dict[SkewShape, BetaPoly]:
        return dict(self._terms)

    def items(self) -> list[tuple[SkewShape, BetaPoly]]:
        """Terms in graded-lexicographic order of (outer, inner)."""
        return sorted(self._terms.items(), key=lambda kv: skew_key(kv[0]))

    def __getitem__(self, shape) -> BetaPoly:
        outer, inner = shape
        return self._terms.get((tuple(outer), tuple(inner)), ZERO)

    def __bool__(self):
        return bool(self._terms)

    def is_skew(self) -> bool:
        """True when every inner shape lies inside its outer shape."""
        return all(contains(o, n) for o, n in self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, SkewSum):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __add__(self, other: SkewSum) -> SkewSum:
        t = dict(self._terms)
        for k, c in other._terms.items():
            s = t[k] + c if k in t else c
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return SkewSum._raw(t)

    def __neg__(self):
        return SkewSum._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> SkewSum:
        c = c if isinstance(c, BetaPoly) else BetaPoly(c)
        if not c:
            return SkewSum()
        return SkewSum._raw({k: v * c for k, v in self._terms.items()})

    def map_basis(self, fn: Callable[[Partition, Partition], SkewSum]) -> SkewSum:
        """Linear extension of a map defined on single shapes."""
        acc: dict[SkewShape, BetaPoly] = {}
        for (outer, inner), c in self._terms.items():
            for k, d in fn(outer, inner)._terms.items():
                v = c * d
                s = acc[k] + v if k in acc else v
                if s:
                    acc[k] = s
                else:
                    acc.pop(k, None)
        return SkewSum._raw(acc)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for (outer, inner), c in self.items():
            label = f"({','.join(map(str, outer))}/{','.join(map(str, inner))})"
            out.append(label if c == 1 else f"({c.to_text()}){label}")
        return " + ".join(out)

    def __repr__(self):
        return f"SkewSum({self.to_text()})"


# -- single-partition rules ----------------------------------------------------


def _padded(lam: Partition, n: int) -> list[int]:
    return list(lam) + [0] * max(0, n - len(lam))


def u_on_partition(i: int, lam: Partition) -> tuple[Partition, BetaPoly]:
    """u_i . lam = (-beta)^{|closure| - |lam + e_i|} times the smallest partition containing lam + e_i."""
    n = _padded(lam, i)
    n[i - 1] += 1
    closure, exp = suffix_max_closure(n)
    return closure, neg_beta_power(exp)


def v_on_partition(i: int, lam: Partition) -> tuple[Partition, BetaPoly]:
    """Add a box in row i if the result is a partition, otherwise -beta . lam."""
    if i == 1 or part(lam, i - 1) > part(lam, i):
        n = _padded(lam, i)
        n[i - 1] += 1
        return make_partition(n), ONE
    return lam, neg_beta_power(1)


def V_on_partition(i: int, lam: Partition) -> tuple[Partition, BetaPoly]:
    """Remove a box from row i if the result is a partition, otherwise -beta . lam."""
    if part(lam, i) > part(lam, i + 1):
        n = _padded(lam, i)
        n[i - 1] -= 1
        return make_partition(n), ONE
    return lam, neg_beta_power(1)


def U_on_partition(i: int, lam: Partition) -> tuple[Partition, BetaPoly] | None:
    """None (the zero vector) when lam_i = 0, otherwise
    (-beta)^{|lam - e_i| - |closure|} times the largest partition inside lam - e_i."""
    if part(lam, i) == 0:
        return None
    n = _padded(lam, i)
    n[i - 1] -= 1
    closure, exp = prefix_min_closure(n)
    return closure, neg_beta_power(exp)


_RULES = {"u": u_on_partition, "v": v_on_partition, "U": U_on_partition, "V": V_on_partition}


def _check_family(family: str) -> None:
    if family not in FAMILIES:
        raise ValueError(f"unknown operator family {family!r}")


def _check_index(i: int) -> None:
    if i < 1:
        raise ValueError(f"operator index must be positive, got {i}")


def op_on_partition(family: str, i: int, lam: Partition):
    _check_family(family)
    _check_index(i)
    return _RULES[family](i, make_partition(lam))


# -- actions on skew shapes ----------------------------------------------------


def _dot_basis(family: str, i: int, outer: Partition, inner: Partition) -> SkewSum:
    rule = _RULES[family]
    if family in ("u", "v"):
        res = rule(i, outer)
        return SkewSum._raw({(res[0], inner): res[1]})
    res = rule(i, inner)
    if res is None:
        return SkewSum()
    return SkewSum._raw({(outer, res[0]): res[1]})


def apply_op(family: str, i: int, elt: SkewSum) -> SkewSum:
    """The dot action: u_i, v_i change the outer shape, U_i, V_i the inner one."""
    _check_family(family)
    _check_index(i)
    return elt.map_basis(lambda outer, inner: _dot_basis(family, i, outer, inner))


def _star_basis(family: str, i: int, outer: Partition, inner: Partition, printed: bool,
                guard: bool) -> SkewSum:
    if family in ("u", "v"):
        new_inner, c = _RULES[family](i, inner)
        if guard and not contains(outer, new_inner):
            return SkewSum()
        return SkewSum._raw({(outer, new_inner): c})
    if family == "V" and printed:
        res = v_on_partition(i, outer)
    else:
        res = _RULES[family](i, outer)
    if res is None or (guard and not contains(res[0], inner)):
        return SkewSum()
    return SkewSum._raw({(res[0], inner): res[1]})


def apply_star(family: str, i: int, elt: SkewSum, variant: str = "derived",
               guard: bool = True) -> SkewSum:
    """The transposed action: u_i, v_i change the inner shape, U_i, V_i the
    outer one.  With ``guard`` (the default) a term whose inner shape would
    leave the outer one is dropped; without it such pairs are kept.

    The default lets V_i act on the outer shape by V_i.  ``variant="printed"``
    uses v_i there instead, which grows the outer shape.
    """
    _check_family(family)
    _check_index(i)
    if variant not in ("derived", "printed"):
        raise ValueError(f"unknown star-action variant {variant!r}")
    printed = variant == "printed"
    return elt.map_basis(lambda outer, inner: _star_basis(family, i, outer, inner, printed, guard))


@dataclass(frozen=True)
class OpWord:
    """A monomial in one operator family, written left to right."""

    family: str
    indices: tuple[int, ...]

    def __post_init__(self):
        _check_family(self.family)
        for i in self.indices:
            _check_index(i)

    def apply(self, elt: SkewSum, star: bool = False, variant: str = "derived",
              guard: bool = True) -> SkewSum:
        for i in reversed(self.indices):
            if not elt:
                break
            if star:
                elt = apply_star(self.family, i, elt, variant, guard)
            else:
                elt = apply_op(self.family, i, elt)
        return elt

    def __str__(self):
        return "".join(f"{self.family}_{i}" for i in self.indices) or "1"


def _as_skew(nu) -> SkewShape:
    if len(nu) == 2 and all(isinstance(x, tuple) for x in nu):
        return make_partition(nu[0]), make_partition(nu[1])
    return make_partition(nu), ()


def schur_words(family: str, nu, m: int) -> list[OpWord]:
    """Column-word monomials of the tableaux of shape nu over m letters.

    For U and V the letters are primed, ordered 1' > 2' > ... > m': rows
    weakly decrease and columns strictly decrease in integer value.  These
    are obtained from ordinary tableaux by relabelling k -> m + 1 - k.
    """
    _check_family(family)
    outer, inner = _as_skew(nu)
    if m < 0:
        raise ValueError("alphabet size must be nonnegative")
    words = []
    for t in enumerate_ssyt(outer, inner, m):
        w = column_word(t)
        if family in PRIMED:
            w = tuple(m + 1 - k for k in w)
        words.append(OpWord(family, w))
    return words


def noncomm_schur_apply(family: str, nu, m: int, elt: SkewSum, star: bool = False,
                        variant: str = "derived", guard: bool = True) -> SkewSum:
    """s_nu(family_1..family_m) applied to ``elt``; nu may be a partition or an (outer, inner) pair."""
    acc = SkewSum()
    for w in schur_words(family, nu, m):
        acc = acc + w.apply(elt, star, variant, guard)
    return acc


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def super_noncomm_apply(nu, m: int, s: int, pair: tuple[str, str], elt: SkewSum,
                        star: bool = False) -> SkewSum:
    """s_nu(a_m / B_s) . elt with (a, B) = (u, U) or (v, V):
    sum over kappa inside nu of (-1)^{|nu/kappa|} s_{(nu/kappa)'}(B_s) s_kappa(a_m),
    the a-factor applied first."""
    if tuple(pair) not in (("u", "U"), ("v", "V")):
        raise ValueError(f"operator pair must be (u, U) or (v, V), got {pair}")
    a, b = pair
    nu = make_partition(nu)
    nut = conjugate(nu)
    acc = SkewSum()
    for kappa in subpartitions(nu):
        first = noncomm_schur_apply(a, kappa, m, elt, star)
        if not first:
            continue
        second = noncomm_schur_apply(b, (nut, conjugate(kappa)), s, first, star)
        acc = acc + second.scale(_sign(size(nu) - size(kappa)))
    return acc


def super_negbeta_apply(nu, family: str, r: int, elt: SkewSum, variant: str = "derived",
                        guard: bool = True) -> SkewSum:
    """s_nu(X_r / (-beta)^r) acting by the transposed action, X = V or U:
    sum over kappa inside nu of (-1)^{|nu/kappa|} s_{(nu/kappa)'}(-beta,...,-beta) s_kappa(X_r) * elt."""
    if family not in ("V", "U"):
        raise ValueError("family must be V or U")
    nu = make_partition(nu)
    nut = conjugate(nu)
    acc = SkewSum()
    for kappa in subpartitions(nu):
        c = skew_schur_at_negbeta(nut, conjugate(kappa), r)
        if not c:
            continue
        term = noncomm_schur_apply(family, kappa, r, elt, star=True, variant=variant, guard=guard)
        acc = acc + term.scale(c * _sign(size(nu) - size(kappa)))
    return acc


# -- expansions ----------------------------------------------------------------


@dataclass(frozen=True)
class Expansion:
    """A skew-shape combination to be read in the basis ``basis``
    ("G//", "G/" or "g").  ``validity_mod`` is n when the identity holds
    modulo I_n (Schur functions of length > n), None when it is exact."""

    basis: str
    terms: SkewSum
    validity_mod: int | None = None

    def items(self) -> list[tuple[SkewShape, BetaPoly]]:
        return self.terms.items()

    def realize(self, D: int | None = None) -> SymFunc:
        """Image in the Schur basis; G bases need the x-degree bound D."""
        return realize(self.terms, self.basis, D)


def realize(elt: SkewSum, basis: str, D: int | None = None) -> SymFunc:
    """Apply the linear map (outer, inner) -> G_{outer//inner}, G_{outer/inner} or g_{outer/inner}."""
    from .grothendieck import G_skew_double, G_skew_single, g_skew

    if basis in ("G//", "G/") and D is None:
        raise ValueError("realizing in a G basis needs a degree bound")
    acc = zero(D if basis != "g" else None)
    for (outer, inner), c in elt.items():
        if basis == "G//":
            f = G_skew_double(outer, inner, D)
        elif basis == "G/":
            f = G_skew_single(outer, inner, D)
        elif basis == "g":
            f = g_skew(outer, inner)
        else:
            raise ValueError(f"unknown basis {basis!r}")
        acc = acc + f.scale(c)
    return acc


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def expand_sg(nu, lam, mu, r: int) -> Expansion:
    """s_nu g_{lam/mu} = g( s_nu(v_{r+1} / V_r) . (lam, mu) ), exact for r >= l(lam) + l(nu)."""
    nu, lam, mu = make_partition(nu), make_partition(lam), make_partition(mu)
    _require(contains(lam, mu), f"inner {mu} must be contained in outer {lam}")
    _require(r >= length(lam) + length(nu), f"need r >= l(lam) + l(nu) = {length(lam) + length(nu)}, got r={r}")
    terms = super_noncomm_apply(nu, r + 1, r, ("v", "V"), SkewSum.basis(lam, mu))
    return Expansion("g", terms, None)


def _expand_sG(nu, lam, mu, r: int, s: int, basis: str) -> Expansion:
    nu, lam, mu = make_partition(nu), make_partition(lam), make_partition(mu)
    _require(contains(lam, mu), f"inner {mu} must be contained in outer {lam}")
    _require(r >= length(lam), f"need r >= l(lam) = {length(lam)}, got r={r}")
    _require(s >= length(mu), f"need s >= l(mu) = {length(mu)}, got s={s}")
    terms = super_noncomm_apply(nu, r, s, ("u", "U"), SkewSum.basis(lam, mu))
    return Expansion(basis, terms, r - s)


def expand_sG_double(nu, lam, mu, r: int, s: int) -> Expansion:
    """s_nu G_{lam//mu} = G//( s_nu(u_r / U_s) . (lam, mu) ) modulo I_{r-s},
    for r >= l(lam), s >= l(mu).  A negative r - s makes the congruence empty."""
    return _expand_sG(nu, lam, mu, r, s, "G//")


def expand_sG_single(nu, lam, mu, r: int, s: int) -> Expansion:
    """The single-slash analogue of expand_sG_double."""
    return _expand_sG(nu, lam, mu, r, s, "G/")


def perp_expand_G(nu, lam, mu, r: int, variant: str = "derived") -> Expansion:
    """s_nu^perp G_{lam/mu} = G/( s_nu(V_r / (-beta)^r) * (lam, mu) ) for r >= l(lam).

    The transposed action runs without the containment guard: a pair
    (alpha, sigma) with sigma outside alpha still stands for the
    determinant G_{alpha/sigma}, which is not zero (G_{()/(1)} = -beta).
    Dropping those pairs breaks the identity.  ``variant="printed"``
    reproduces the displayed rule instead: V_i acting by v_i, with the guard.
    """
    nu, lam, mu = make_partition(nu), make_partition(lam), make_partition(mu)
    _require(contains(lam, mu), f"inner {mu} must be contained in outer {lam}")
    _require(r >= length(lam), f"need r >= l(lam) = {length(lam)}, got r={r}")
    guard = variant == "printed"
    terms = super_negbeta_apply(nu, "V", r, SkewSum.basis(lam, mu), variant, guard=guard)
    return Expansion("G/", terms, None)


def perp_expand_g(nu, lam, mu, r: int) -> Expansion:
    """s_nu^perp g_{lam/mu} = g( s_nu(U_r) * (lam, mu) ) for r >= l(lam)."""
    nu, lam, mu = make_partition(nu), make_partition(lam), make_partition(mu)
    _require(contains(lam, mu), f"inner {mu} must be contained in outer {lam}")
    _require(r >= length(lam), f"need r >= l(lam) = {length(lam)}, got r={r}")
    terms = noncomm_schur_apply("U", nu, r, SkewSum.basis(lam, mu), star=True)
    return Expansion("g", terms, None)


def minimal_r(kind: str, nu, lam, mu=()) -> tuple[int, int | None]:
    """Smallest legal (r, s) for an expansion kind: "sg", "sG//", "sG/", "perp"."""
    nu, lam, mu = make_partition(nu), make_partition(lam), make_partition(mu)
    if kind == "sg":
        return length(lam) + length(nu), None
    if kind in ("sG//", "sG/"):
        return length(lam), length(mu)
    if kind == "perp":
        return length(lam), None
    raise ValueError(f"unknown expansion kind {kind!r}")
