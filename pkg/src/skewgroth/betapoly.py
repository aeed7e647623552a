"""Exact polynomials in the formal parameter beta over the rationals."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class BetaPoly:
    """An element of Q[beta], stored as a sparse map exponent -> coefficient.

    Coefficients are kept as ``int`` whenever they are integral and as
    ``Fraction`` otherwise.  Instances are immutable and hashable.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, Rational] | Rational | None = None):
        if coeffs is None:
            c = {}
        elif isinstance(coeffs, Mapping):
            c = {}
            for e, v in coeffs.items():
                if e < 0:
                    raise ValueError(f"negative beta exponent {e}")
                if v:
                    c[int(e)] = _normalize(v)
        else:
            c = {0: _normalize(coeffs)} if coeffs else {}
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> BetaPoly:
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp: int, coeff: Rational = 1) -> BetaPoly:
        return cls({exp: coeff})

    # -- inspection ---------------------------------------------------------
    @property
    def coeffs(self) -> dict[int, Rational]:
        return dict(self._c)

    def __getitem__(self, exp: int):
        return self._c.get(exp, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __iter__(self):
        return iter(sorted(self._c.items()))

    def degree(self) -> int:
        return max(self._c) if self._c else -1

    def min_degree(self) -> int:
        return min(self._c) if self._c else -1

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {0}

    def constant(self):
        return self._c.get(0, 0)

    # -- arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(other) -> BetaPoly | None:
        if isinstance(other, BetaPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BetaPoly(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for e, v in o._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = _normalize(s)
            else:
                c.pop(e, None)
        return BetaPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return BetaPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._c or not o._c:
            return BetaPoly._raw({})
        c: dict[int, Rational] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in o._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return BetaPoly._raw({e: _normalize(v) for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("BetaPoly powers must be nonnegative")
        result = BetaPoly(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def truncate(self, max_exp: int) -> BetaPoly:
        """Drop every term of beta-degree above ``max_exp``."""
        return BetaPoly._raw({e: v for e, v in self._c.items() if e <= max_exp})

    def shift(self, k: int) -> BetaPoly:
        """Multiply by beta**k."""
        return BetaPoly._raw({e + k: v for e, v in self._c.items()})

    def evaluate(self, beta: Rational) -> Rational:
        return _normalize(sum((Fraction(v) * Fraction(beta) ** e for e, v in self._c.items()), Fraction(0)))

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- serialization ------------------------------------------------------
    def to_triples(self) -> list[list[int]]:
        """``[[beta_exp, numerator, denominator], ...]`` in increasing exponent."""
        out = []
        for e, v in sorted(self._c.items()):
            f = Fraction(v)
            out.append([e, f.numerator, f.denominator])
        return out

    @classmethod
    def from_triples(cls, triples: Iterable[Iterable[int]]) -> BetaPoly:
        c: dict[int, Fraction] = {}
        for e, num, den in triples:
            c[int(e)] = c.get(int(e), 0) + Fraction(int(num), int(den))
        return cls(c)

    def __repr__(self):
        return f"BetaPoly({self.to_text()})"

    def to_text(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items()):
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "b"
            else:
                mono = f"b^{e}"
            if mono and v == 1:
                parts.append(mono)
            elif mono and v == -1:
                parts.append("-" + mono)
            elif mono:
                parts.append(f"{v}*{mono}")
            else:
                parts.append(str(v))
        return " + ".join(parts).replace("+ -", "- ")


ZERO = BetaPoly()
ONE = BetaPoly(1)
BETA = BetaPoly.monomial(1)
NEG_BETA = BetaPoly.monomial(1, -1)


def neg_beta_power(k: int) -> BetaPoly:
    """(-beta)**k for k >= 0."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    return BetaPoly._raw({k: -1 if k % 2 else 1})


def beta_power(k: int, coeff: Rational = 1) -> BetaPoly:
    return BetaPoly.monomial(k, coeff)
