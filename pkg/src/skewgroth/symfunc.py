"""Truncated symmetric functions over Q[beta] in the Schur basis.

A :class:`SymFunc` is faithful up to an x-degree ``bound``: every Schur
coefficient s_lam with |lam| <= bound is exact, higher ones are unknown and
not stored.  ``bound=None`` marks an exact element of Lambda (a genuine
polynomial such as g_lam).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping

from .betapoly import ONE, ZERO, BetaPoly, neg_beta_power
from .core import (
    Partition,
    conjugate,
    contains,
    count_ssyt,
    graded_key,
    length,
    make_partition,
    part,
    partitions_of,
    size,
)

# -- Littlewood-Richardson coefficients --------------------------------------


@lru_cache(maxsize=None)
def lr_skew(outer: Partition, inner: Partition) -> Mapping[Partition, int]:
    """Expansion of the skew Schur function s_{outer/inner} in Schur functions.

    Counts Littlewood-Richardson fillings: semistandard fillings whose reverse
    row reading word (rows top to bottom, each right to left) is a lattice
    word.  lru_cache serializes its own bookkeeping, so concurrent callers
    see identical results.
    """
    if not contains(outer, inner):
        return {}
    rows = [(part(inner, i + 1), outer[i]) for i in range(len(outer))]
    filled: dict[tuple[int, int], int] = {}
    counts = [0] * (len(outer) + 2)
    result: dict[Partition, int] = {}
    order = [(i, c) for i, (a, b) in enumerate(rows) for c in range(b - 1, a - 1, -1)]

    def rec(k: int, maxused: int):
        if k == len(order):
            nu = make_partition(counts[1:maxused + 1])
            result[nu] = result.get(nu, 0) + 1
            return
        i, c = order[k]
        lo = 1
        if i > 0 and c >= part(inner, i):
            lo = filled[(i - 1, c)] + 1
        hi = maxused + 1
        if (i, c + 1) in filled:
            hi = min(hi, filled[(i, c + 1)])
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            filled[(i, c)] = v
            counts[v] += 1
            rec(k + 1, max(maxused, v))
            counts[v] -= 1
            del filled[(i, c)]

    rec(0, 0)
    return result


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^lam_{mu nu}."""
    if size(lam) != size(mu) + size(nu):
        return 0
    return lr_skew(lam, mu).get(nu, 0)


@lru_cache(maxsize=None)
def lr_product(mu: Partition, nu: Partition) -> Mapping[Partition, int]:
    """s_mu * s_nu as a map lam -> c^lam_{mu nu}."""
    if len(mu) < len(nu) or (len(mu) == len(nu) and mu < nu):
        return lr_product(nu, mu)
    n = size(mu) + size(nu)
    maxlen = len(mu) + len(nu)
    out = {}
    for lam in partitions_of(n):
        if len(lam) > maxlen or not contains(lam, mu) or not contains(lam, nu):
            continue
        c = lr_skew(lam, mu).get(nu, 0)
        if c:
            out[lam] = c
    return out


# -- the truncated ring ---------------------------------------------------------


@dataclass(frozen=True)
class Grading:
    """Homogeneity with deg(beta) = beta_weight: every term beta^k s_nu has
    |nu| + beta_weight * k == degree.  G-type elements use weight -1,
    g-type elements weight +1."""

    degree: int
    beta_weight: int = -1


def _min_bound(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _as_beta(c) -> BetaPoly:
    return c if isinstance(c, BetaPoly) else BetaPoly(c)


class SymFunc:
    """Finitely supported map partition -> BetaPoly with a degree bound.

    Equality compares the term maps only; compare ``bound`` separately
    when it matters.
    """

    __slots__ = ("_terms", "bound", "grading")

    def __init__(self, terms: Mapping[Partition, BetaPoly | Rational] | None = None,
                 bound: int | None = None, grading: Grading | None = None):
        t = {}
        for lam, c in (terms or {}).items():
            lam = make_partition(lam)
            if bound is not None and size(lam) > bound:
                continue
            c = _as_beta(c)
            if c:
                t[lam] = t[lam] + c if lam in t else c
        self._terms = {k: v for k, v in t.items() if v}
        self.bound = bound
        self.grading = grading

    @classmethod
    def _raw(cls, terms: dict, bound, grading=None) -> SymFunc:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.bound = bound
        obj.grading = grading
        return obj

    # -- inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict[Partition, BetaPoly]:
        return dict(self._terms)

    def __getitem__(self, lam) -> BetaPoly:
        return self._terms.get(tuple(lam), ZERO)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def items(self) -> list[tuple[Partition, BetaPoly]]:
        return sorted(self._terms.items(), key=lambda kv: graded_key(kv[0]))

    def support(self) -> list[Partition]:
        return [lam for lam, _ in self.items()]

    def top_degree(self) -> int:
        return max((size(lam) for lam in self._terms), default=-1)

    @property
    def exact(self) -> bool:
        return self.bound is None

    def __eq__(self, other):
        if isinstance(other, SymFunc):
            return self._terms == other._terms
        if isinstance(other, (int, BetaPoly)):
            return self == SymFunc({(): other})
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"SymFunc({self.to_text()}, bound={self.bound})"

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for lam, c in self.items():
            label = "s(" + ",".join(map(str, lam)) + ")"
            parts.append(label if c == 1 else f"({c.to_text()})*{label}")
        return " + ".join(parts)

    # -- ring operations ----------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, BetaPoly)):
            other = SymFunc({(): other}, bound=self.bound)
        if not isinstance(other, SymFunc):
            return NotImplemented
        bound = _min_bound(self.bound, other.bound)
        t = {}
        for src in (self._terms, other._terms):
            for lam, c in src.items():
                if bound is not None and size(lam) > bound:
                    continue
                t[lam] = t[lam] + c if lam in t else c
        grading = self.grading if self.grading == other.grading else None
        return SymFunc._raw({k: v for k, v in t.items() if v}, bound, grading)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc._raw({k: -v for k, v in self._terms.items()}, self.bound, self.grading)

    def __sub__(self, other):
        if isinstance(other, (int, BetaPoly)):
            other = SymFunc({(): other}, bound=self.bound)
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> SymFunc:
        c = _as_beta(c)
        if not c:
            return SymFunc._raw({}, self.bound, self.grading)
        grading = self.grading if c.is_constant() else None
        return SymFunc._raw({k: v * c for k, v in self._terms.items() if v * c}, self.bound, grading)

    def __mul__(self, other):
        if isinstance(other, (int, BetaPoly)):
            return self.scale(other)
        if not isinstance(other, SymFunc):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, BetaPoly)):
            return self.scale(other)
        return NotImplemented

    # -- truncations --------------------------------------------------------
    def truncate_degree(self, d: int) -> SymFunc:
        """Keep |lam| <= d and lower the bound accordingly."""
        bound = _min_bound(self.bound, d)
        return SymFunc._raw({k: v for k, v in self._terms.items() if size(k) <= bound}, bound, self.grading)

    def truncate_beta(self, b: int) -> SymFunc:
        """Reduce every coefficient modulo beta^(b+1)."""
        t = {}
        for k, v in self._terms.items():
            v = v.truncate(b)
            if v:
                t[k] = v
        return SymFunc._raw(t, self.bound, self.grading)

    def with_bound(self, bound: int | None) -> SymFunc:
        return SymFunc(self._terms, bound, self.grading)

    def with_grading(self, grading: Grading | None) -> SymFunc:
        return SymFunc._raw(dict(self._terms), self.bound, grading)

    def substitute_beta(self, value: Rational) -> dict[Partition, Rational]:
        out = {}
        for lam, c in self.items():
            v = c.evaluate(value)
            if v:
                out[lam] = v
        return out


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Schur-basis product through Littlewood-Richardson coefficients."""
    bound = _min_bound(f.bound, g.bound)
    acc: dict[Partition, BetaPoly] = {}
    for mu, a in f._terms.items():
        for nu, b in g._terms.items():
            if bound is not None and size(mu) + size(nu) > bound:
                continue
            ab = a * b
            for lam, c in lr_product(mu, nu).items():
                term = ab * c if c != 1 else ab
                acc[lam] = acc[lam] + term if lam in acc else term
    grading = None
    if f.grading and g.grading and f.grading.beta_weight == g.grading.beta_weight:
        grading = Grading(f.grading.degree + g.grading.degree, f.grading.beta_weight)
    return SymFunc._raw({k: v for k, v in acc.items() if v}, bound, grading)


def one(bound: int | None = None) -> SymFunc:
    return SymFunc({(): ONE}, bound)


def zero(bound: int | None = None) -> SymFunc:
    return SymFunc({}, bound)


def schur(lam: Iterable[int], bound: int | None = None) -> SymFunc:
    """The basis element s_lam (zero when |lam| exceeds the bound)."""
    lam = make_partition(lam)
    return SymFunc({lam: ONE}, bound)


def h_gen(i: int, bound: int | None = None) -> SymFunc:
    if i < 0:
        return zero(bound)
    return schur((i,) if i else (), bound)


def e_gen(i: int, bound: int | None = None) -> SymFunc:
    if i < 0:
        return zero(bound)
    return schur((1,) * i, bound)


def hall_inner(f: SymFunc, g: SymFunc) -> BetaPoly:
    """<f, g> with <s_lam, s_mu> = delta.  ``g`` must be known on its whole
    support and ``f`` faithful up to g's top degree."""
    if g.bound is not None and f.bound is not None:
        raise ValueError("hall_inner needs an exact second argument")
    if f.bound is not None and f.bound < g.top_degree():
        raise ValueError(f"bound violation: first argument faithful to degree {f.bound}, "
                         f"second argument reaches degree {g.top_degree()}")
    total = ZERO
    for lam, c in g._terms.items():
        a = f._terms.get(lam)
        if a is not None:
            total = total + a * c
    return total


def perp_schur(mu: Iterable[int], f: SymFunc) -> SymFunc:
    """s_mu^perp f, the adjoint of multiplication by s_mu."""
    mu = make_partition(mu)
    bound = None if f.bound is None else max(f.bound - size(mu), 0)
    acc: dict[Partition, BetaPoly] = {}
    for lam, c in f._terms.items():
        for nu, k in lr_skew(lam, mu).items():
            if bound is not None and size(nu) > bound:
                continue
            term = c * k if k != 1 else c
            acc[nu] = acc[nu] + term if nu in acc else term
    grading = None
    if f.grading is not None:
        grading = Grading(f.grading.degree - size(mu), f.grading.beta_weight)
    return SymFunc._raw({k: v for k, v in acc.items() if v}, bound, grading)


def perp(g: SymFunc, f: SymFunc) -> SymFunc:
    """g^perp f = sum_kappa g[kappa] s_kappa^perp f.

    One side must be exact.  With f exact, g must be faithful up to f's top
    degree and the result is exact; with g exact and f truncated at D, the
    result is faithful up to D - (top degree of g).
    """
    if f.bound is None:
        if g.bound is not None and g.bound < f.top_degree():
            raise ValueError(f"bound violation: operator faithful to degree {g.bound}, "
                             f"argument reaches degree {f.top_degree()}")
        bound = None
    elif g.bound is None:
        bound = max(f.bound - max(g.top_degree(), 0), 0)
    else:
        raise ValueError("perp needs at least one exact argument")
    acc: dict[Partition, BetaPoly] = {}
    for kappa, a in g._terms.items():
        if f.bound is None and size(kappa) > f.top_degree():
            continue
        piece = perp_schur(kappa, f)
        for nu, c in piece._terms.items():
            if bound is not None and size(nu) > bound:
                continue
            term = a * c
            acc[nu] = acc[nu] + term if nu in acc else term
    return SymFunc._raw({k: v for k, v in acc.items() if v}, bound)


def truncate_length(f: SymFunc, n: int) -> SymFunc:
    """iota_n pi_n: drop every s_lam with more than n rows."""
    return SymFunc._raw({k: v for k, v in f._terms.items() if length(k) <= n}, f.bound, f.grading)


def check_grading(f: SymFunc, grading: Grading | None = None) -> bool:
    """Every coefficient is a single monomial of the degree ``grading`` demands."""
    grading = grading or f.grading
    if grading is None:
        raise ValueError("element carries no grading")
    w = grading.beta_weight
    for lam, c in f._terms.items():
        if not c.is_monomial():
            return False
        (k, _), = c
        if size(lam) + w * k != grading.degree:
            return False
    return True


def skew_schur_at_negbeta(outer: Partition, inner: Partition, r: int) -> BetaPoly:
    """s_{outer/inner}(-beta, ..., -beta) with r arguments."""
    outer, inner = make_partition(outer), make_partition(inner)
    if not contains(outer, inner):
        return ZERO
    n = size(outer) - size(inner)
    return neg_beta_power(n) * count_ssyt(outer, inner, r)


# -- two alphabets --------------------------------------------------------------


class Bisym:
    """Element of Lambda(x) (x) Lambda(y): map (lam_x, lam_y) -> BetaPoly,
    truncated at x-degree ``dx`` and y-degree ``dy``."""

    __slots__ = ("_terms", "dx", "dy")

    def __init__(self, terms: Mapping[tuple[Partition, Partition], BetaPoly | Rational] | None = None,
                 dx: int | None = None, dy: int | None = None):
        t = {}
        for (a, b), c in (terms or {}).items():
            a, b = make_partition(a), make_partition(b)
            if (dx is not None and size(a) > dx) or (dy is not None and size(b) > dy):
                continue
            c = _as_beta(c)
            t[(a, b)] = t.get((a, b), ZERO) + c
        self._terms = {k: v for k, v in t.items() if v}
        self.dx, self.dy = dx, dy

    @property
    def terms(self) -> dict[tuple[Partition, Partition], BetaPoly]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: (graded_key(kv[0][0]), graded_key(kv[0][1])))

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Bisym):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __repr__(self):
        return f"Bisym({self.items()})"

    def _combine(self, other: Bisym, sign: int) -> Bisym:
        dx, dy = _min_bound(self.dx, other.dx), _min_bound(self.dy, other.dy)
        t = dict(self._terms)
        for k, v in other._terms.items():
            t[k] = t.get(k, ZERO) + (v if sign > 0 else -v)
        return Bisym(t, dx, dy)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return Bisym({k: -v for k, v in self._terms.items()}, self.dx, self.dy)

    def __mul__(self, other):
        if isinstance(other, (int, BetaPoly)):
            return Bisym({k: v * other for k, v in self._terms.items()}, self.dx, self.dy)
        dx, dy = _min_bound(self.dx, other.dx), _min_bound(self.dy, other.dy)
        acc: dict = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                if dx is not None and size(a1) + size(a2) > dx:
                    continue
                if dy is not None and size(b1) + size(b2) > dy:
                    continue
                c = c1 * c2
                for a, ka in lr_product(a1, a2).items():
                    for b, kb in lr_product(b1, b2).items():
                        acc[(a, b)] = acc.get((a, b), ZERO) + c * (ka * kb)
        return Bisym(acc, dx, dy)

    __rmul__ = __mul__


def super_schur(lam: Iterable[int], dx: int | None = None, dy: int | None = None) -> Bisym:
    """s_lam(x/y) = sum_{mu in lam} (-1)^{|lam/mu|} s_{(lam/mu)'}(y) s_mu(x)."""
    from .core import subpartitions

    lam = make_partition(lam)
    lamc = conjugate(lam)
    terms: dict = {}
    for mu in subpartitions(lam):
        sign = -1 if (size(lam) - size(mu)) % 2 else 1
        for kappa, c in lr_skew(lamc, conjugate(mu)).items():
            key = (mu, kappa)
            terms[key] = terms.get(key, 0) + sign * c
    return Bisym(terms, dx, dy)


def super_e(i: int, dx: int | None = None, dy: int | None = None) -> Bisym:
    """e_i(x/y) = sum_k (-1)^k h_k(y) e_{i-k}(x)."""
    if i < 0:
        return Bisym({}, dx, dy)
    terms = {}
    for k in range(i + 1):
        terms[((1,) * (i - k), (k,) if k else ())] = -1 if k % 2 else 1
    return Bisym(terms, dx, dy)


def bisym_one(dx=None, dy=None) -> Bisym:
    return Bisym({((), ()): 1}, dx, dy)
