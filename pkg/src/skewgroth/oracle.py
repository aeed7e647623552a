"""Independent checks through explicit polynomials in finitely many variables.

Everything here works with monomials x_1^{a_1} ... x_m^{a_m} over Q[beta],
so it shares no code path with the Schur-basis arithmetic it is used to
verify (apart from the scalar type).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Mapping

from .betapoly import ONE, BetaPoly, beta_power
from .core import Partition, laplace_det, length, make_partition, part, tabulate

Exps = tuple[int, ...]


class MultiPoly:
    """Polynomial in x_1..x_nvars with Q[beta] coefficients, stored sparsely."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Exps, BetaPoly | int] | None = None):
        self.nvars = nvars
        t: dict[Exps, BetaPoly] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(a) for a in e)
            if len(e) != nvars or any(a < 0 for a in e):
                raise ValueError(f"bad exponent vector {e} for {nvars} variables")
            c = c if isinstance(c, BetaPoly) else BetaPoly(c)
            if c:
                t[e] = t[e] + c if e in t else c
        self._terms = {e: c for e, c in t.items() if c}

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> MultiPoly:
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        return obj

    @classmethod
    def constant(cls, nvars: int, c=1) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> MultiPoly:
        """x_i, 1-indexed."""
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): 1})

    @property
    def terms(self) -> dict[Exps, BetaPoly]:
        return dict(self._terms)

    def items(self) -> list[tuple[Exps, BetaPoly]]:
        """Graded lexicographic order of exponent vectors."""
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), tuple(-a for a in kv[0])))

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        return NotImplemented

    __hash__ = None

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def truncate(self, max_degree: int) -> MultiPoly:
        """Drop monomials of total x-degree above ``max_degree``."""
        return MultiPoly._raw(self.nvars, {e: c for e, c in self._terms.items() if sum(e) <= max_degree})

    def _check(self, other: MultiPoly):
        if other.nvars != self.nvars:
            raise ValueError("variable counts differ")

    def __add__(self, other):
        if isinstance(other, (int, BetaPoly)):
            other = MultiPoly.constant(self.nvars, other)
        self._check(other)
        t = dict(self._terms)
        for e, c in other._terms.items():
            s = t[e] + c if e in t else c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return MultiPoly._raw(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, BetaPoly)):
            other = MultiPoly.constant(self.nvars, other)
        return self + (-other)

    def scale(self, c) -> MultiPoly:
        c = c if isinstance(c, BetaPoly) else BetaPoly(c)
        if not c:
            return MultiPoly(self.nvars)
        return MultiPoly._raw(self.nvars, {e: v * c for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, BetaPoly)):
            return self.scale(other)
        self._check(other)
        acc: dict[Exps, BetaPoly] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                acc[e] = acc[e] + v if e in acc else v
        return MultiPoly._raw(self.nvars, {e: c for e, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MultiPoly:
        out = MultiPoly.constant(self.nvars)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, i: int, k: int = 1) -> MultiPoly:
        """Multiply by x_i^k."""
        t = {}
        for e, c in self._terms.items():
            e2 = list(e)
            e2[i - 1] += k
            t[tuple(e2)] = c
        return MultiPoly._raw(self.nvars, t)

    def substitute(self, mapping: Mapping[int, int]) -> MultiPoly:
        """Rename variables: x_i -> x_{mapping[i]} (1-indexed), merging exponents."""
        t: dict[Exps, BetaPoly] = {}
        for e, c in self._terms.items():
            e2 = [0] * self.nvars
            for i, a in enumerate(e, start=1):
                e2[mapping.get(i, i) - 1] += a
            key = tuple(e2)
            t[key] = t[key] + c if key in t else c
        return MultiPoly._raw(self.nvars, {e: c for e, c in t.items() if c})

    def divide_linear(self, i: int, j: int) -> MultiPoly:
        """Exact quotient by (x_i - x_j), by synthetic division in x_i.

        Raises ArithmeticError if the remainder (the value at x_i = x_j) is
        not zero.
        """
        if i == j:
            raise ValueError("cannot divide by x_i - x_i")
        # group by the power of x_i; each coefficient is free of x_i
        by_power: dict[int, dict[Exps, BetaPoly]] = {}
        for e, c in self._terms.items():
            k = e[i - 1]
            e2 = list(e)
            e2[i - 1] = 0
            by_power.setdefault(k, {})[tuple(e2)] = c
        if not by_power:
            return MultiPoly(self.nvars)
        top = max(by_power)
        # a(t) = sum a_k t^k, divide by (t - c) with c = x_j:
        # b_{top-1} = a_top, b_{k-1} = a_k + c b_k, remainder = a_0 + c b_0
        coeffs = {k: MultiPoly._raw(self.nvars, v) for k, v in by_power.items()}
        zero = MultiPoly(self.nvars)
        quotient = zero
        carry = zero
        for k in range(top, 0, -1):
            b = coeffs.get(k, zero) + carry
            quotient = quotient + b.shift(i, k - 1)
            carry = b.shift(j)
        remainder = coeffs.get(0, zero) + carry
        if remainder:
            raise ArithmeticError(f"division by (x_{i} - x_{j}) left a nonzero remainder")
        return quotient

    def to_json(self) -> list[dict]:
        return [{"exps": list(e), "coeff": c.to_triples()} for e, c in self.items()]

    @classmethod
    def from_json(cls, nvars: int, data) -> MultiPoly:
        return cls(nvars, {tuple(d["exps"]): BetaPoly.from_triples(d["coeff"]) for d in data})

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = "*".join(f"x{k + 1}" + (f"^{a}" if a > 1 else "") for k, a in enumerate(e) if a) or "1"
            parts.append(mono if c == 1 else f"({c.to_text()})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.to_text()})"


# -- Schur polynomials ---------------------------------------------------------


@lru_cache(maxsize=None)
def complete_h(k: int, m: int) -> MultiPoly:
    """h_k(x_1..x_m): the sum of all monomials of degree k."""
    if k < 0:
        return MultiPoly(m)
    if k == 0:
        return MultiPoly.constant(m)
    t = {}
    for combo in combinations_with_replacement(range(m), k):
        e = [0] * m
        for v in combo:
            e[v] += 1
        t[tuple(e)] = ONE
    return MultiPoly(m, t)


@lru_cache(maxsize=None)
def schur_poly(lam: Partition, m: int) -> MultiPoly:
    """s_lam(x_1..x_m) by the Jacobi-Trudi determinant det(h_{lam_i - i + j})."""
    lam = make_partition(lam)
    if length(lam) > m:
        return MultiPoly(m)
    n = length(lam)
    mat = tabulate(n, lambda i, j: complete_h(part(lam, i) - i + j, m))
    return laplace_det(mat, MultiPoly.constant(m), MultiPoly(m))


def eval_symfunc(f, m: int, max_degree: int | None = None) -> MultiPoly:
    """Set x_{m+1} = x_{m+2} = ... = 0 in a Schur-basis element."""
    acc = MultiPoly(m)
    for lam, c in f.items():
        if length(lam) > m or (max_degree is not None and sum(lam) > max_degree):
            continue
        acc = acc + schur_poly(lam, m).scale(c)
    return acc


def vandermonde_divide(p: MultiPoly) -> MultiPoly:
    """Exact quotient of p by prod_{i<j} (x_i - x_j)."""
    n = p.nvars
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            p = p.divide_linear(i, j)
    return p


def ratio_formula_G(lam, n: int) -> MultiPoly:
    """G_lam(x_1..x_n) as det( x_i^{lam_j+n-j} (1+beta x_i)^{j-1} ) / prod_{i<j} (x_i - x_j)."""
    lam = make_partition(lam)
    if length(lam) > n:
        raise ValueError(f"need l(lam) <= n, got l(lam)={length(lam)}, n={n}")
    one_plus = [MultiPoly.constant(n) + MultiPoly.variable(n, i).scale(beta_power(1)) for i in range(1, n + 1)]

    def entry(i, j):
        x_pow = MultiPoly.constant(n).shift(i, part(lam, j) + n - j)
        return x_pow * one_plus[i - 1] ** (j - 1)

    num = laplace_det(tabulate(n, entry), MultiPoly.constant(n), MultiPoly(n))
    return vandermonde_divide(num)


def bialternant_schur(lam, n: int) -> MultiPoly:
    """s_lam(x_1..x_n) as det( x_i^{lam_j+n-j} ) / Vandermonde (the beta = 0 case of the ratio)."""
    lam = make_partition(lam)
    if length(lam) > n:
        return MultiPoly(n)
    num = laplace_det(
        tabulate(n, lambda i, j: MultiPoly.constant(n).shift(i, part(lam, j) + n - j)),
        MultiPoly.constant(n),
        MultiPoly(n),
    )
    return vandermonde_divide(num)


def eval_two_alphabet(elt, mx: int, my: int) -> MultiPoly:
    """Evaluate a two-alphabet element at x_1..x_mx, y_1..y_my.

    Variables 1..mx carry x and mx+1..mx+my carry y.
    """
    n = mx + my
    acc = MultiPoly(n)
    for (a, b), c in elt.items():
        if length(a) > mx or length(b) > my:
            continue
        pa = _embed(schur_poly(a, mx), n, 0) if mx else (MultiPoly.constant(n) if not a else MultiPoly(n))
        pb = _embed(schur_poly(b, my), n, mx) if my else (MultiPoly.constant(n) if not b else MultiPoly(n))
        acc = acc + (pa * pb).scale(c)
    return acc


def _embed(p: MultiPoly, n: int, offset: int) -> MultiPoly:
    t = {}
    for e, c in p.terms.items():
        full = [0] * n
        full[offset:offset + len(e)] = e
        t[tuple(full)] = c
    return MultiPoly(n, t)


def identify_alphabets(p: MultiPoly, mx: int) -> MultiPoly:
    """Set y_k = x_k (requires my == mx): the substitution behind s_lam(x/x)."""
    my = p.nvars - mx
    if my != mx:
        raise ValueError("identifying alphabets needs equal sizes")
    return p.substitute({mx + k: k for k in range(1, my + 1)})


__all__ = [
    "MultiPoly",
    "complete_h",
    "schur_poly",
    "eval_symfunc",
    "vandermonde_divide",
    "ratio_formula_G",
    "bialternant_schur",
    "eval_two_alphabet",
    "identify_alphabets",
]
