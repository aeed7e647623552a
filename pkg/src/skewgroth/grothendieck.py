"""Stable Grothendieck polynomials G, their duals g, the skew variants, and
their Jacobi-Trudi type determinants.

G-type objects are infinite series, so every G constructor takes an x-degree
bound ``D`` and returns the truncation.  g-type objects are exact.
"""

from __future__ import annotations

from functools import lru_cache

from .betapoly import BetaPoly, beta_power, neg_beta_power
from .core import (
    Partition,
    binom,
    contains,
    laplace_det,
    length,
    make_partition,
    part,
    rook_strip_predecessors,
    size,
    subpartitions,
    superpartitions,
    tabulate,
)
from .symfunc import Grading, SymFunc, h_gen, one, perp, truncate_length, zero


class NonStabilizationError(ArithmeticError):
    """Raising the beta cutoff changed a retained coefficient."""


def _part(lam, i):
    return part(lam, i)


def _default_r(lam: Partition, mu: Partition) -> int:
    return max(length(lam), length(mu), 1)


# -- straight shapes ---------------------------------------------------------


@lru_cache(maxsize=None)
def G_schur(lam: Partition, D: int) -> SymFunc:
    """Schur expansion of G_lam up to x-degree D.

    The coefficient of s_mu (mu containing lam) is
    beta^{|mu/lam|} det( C(i-1, mu_j - lam_i - j + i) ).
    """
    lam = make_partition(lam)
    terms = {}
    for mu in superpartitions(lam, D):
        r = max(length(lam), length(mu))
        d = laplace_det(tabulate(r, lambda i, j: binom(i - 1, _part(mu, j) - _part(lam, i) - j + i)), 1, 0)
        if d:
            terms[mu] = beta_power(size(mu) - size(lam), d)
    return SymFunc(terms, D, Grading(size(lam), -1))


@lru_cache(maxsize=None)
def g_schur(lam: Partition) -> SymFunc:
    """Schur expansion of g_lam (exact).

    The coefficient of s_mu (mu inside lam) is
    beta^{|lam/mu|} det( C(1-i, lam_i - mu_j - i + j) ).
    """
    lam = make_partition(lam)
    r = length(lam)
    terms = {}
    for mu in subpartitions(lam):
        d = laplace_det(tabulate(r, lambda i, j: binom(1 - i, _part(lam, i) - _part(mu, j) - i + j)), 1, 0)
        if d:
            terms[mu] = beta_power(size(lam) - size(mu), d)
    return SymFunc(terms, None, Grading(size(lam), 1))


@lru_cache(maxsize=None)
def G_index(n: int, D: int) -> SymFunc:
    """G_n: one-row G for n >= 1, 1 for n = 0, and (-beta)^{-n} for n < 0."""
    if n >= 1:
        return G_schur((n,), D)
    return SymFunc({(): neg_beta_power(-n)}, D, Grading(n, -1))


# -- skew G: coproduct (adjoint) definitions ---------------------------------


@lru_cache(maxsize=None)
def G_skew_double(lam: Partition, mu: Partition, D: int) -> SymFunc:
    """G_{lam//mu} = g_mu^perp G_lam, faithful up to x-degree D."""
    lam, mu = make_partition(lam), make_partition(mu)
    if not contains(lam, mu):
        return zero(D).with_grading(Grading(size(lam) - size(mu), -1))
    full = G_schur(lam, D + size(mu))
    res = perp(g_schur(mu), full)
    return res.truncate_degree(D).with_grading(Grading(size(lam) - size(mu), -1))


@lru_cache(maxsize=None)
def G_skew_single_rook(lam: Partition, mu: Partition, D: int) -> SymFunc:
    """G_{lam/mu} obtained by inverting the rook-strip relation
    G_{lam//mu} = sum_{mu/sigma rook strip} beta^{|mu/sigma|} G_{lam/sigma}."""
    lam, mu = make_partition(lam), make_partition(mu)
    acc = G_skew_double(lam, mu, D)
    for sigma, k in rook_strip_predecessors(mu):
        if k == 0:
            continue
        acc = acc - G_skew_single_rook(lam, sigma, D).scale(beta_power(k))
    return acc.with_grading(Grading(size(lam) - size(mu), -1))


@lru_cache(maxsize=None)
def g_skew(lam: Partition, mu: Partition) -> SymFunc:
    """g_{lam/mu} = G_mu^perp g_lam (exact)."""
    lam, mu = make_partition(lam), make_partition(mu)
    top = size(lam)
    if size(mu) > top:
        return zero(None).with_grading(Grading(size(lam) - size(mu), 1))
    res = perp(G_schur(mu, top), g_schur(lam))
    return res.with_grading(Grading(size(lam) - size(mu), 1))


# -- determinant formulas -----------------------------------------------------


def _G_series(m: int, coef, D: int) -> SymFunc:
    """sum_{n >= 0} coef(n) beta^n G_{m+n}, cut where G_{m+n} leaves degree D."""
    acc = zero(D)
    for n in range(0, max(D - m, -m) + 1):
        c = coef(n)
        if c:
            acc = acc + G_index(m + n, D).scale(beta_power(n, c))
    return acc


def _det(matrix, bound) -> SymFunc:
    return laplace_det(matrix, one(bound), zero(bound))


def _delta(i: int, j: int, n: int, r: int, mu_j: int, variant: str) -> int:
    """Boundary correction for the double-slash determinant.

    Summing C(r-j+1, k) C(i-r, n-k) over 0 <= k <= mu_j - j + r is a full
    Vandermonde convolution unless mu_j = 0, where exactly the top term
    k = r-j+1 is missing; that term is C(i-r, n+j-r-1).  ``variant="printed"``
    uses C(i-r, -1-i+j+n) instead, which agrees only on the row i = r.
    """
    if mu_j:
        return 0
    if variant == "printed":
        return binom(i - r, -1 - i + j + n)
    return binom(i - r, n + j - r - 1)


def _check_variant(variant: str) -> None:
    if variant not in ("derived", "printed"):
        raise ValueError(f"unknown determinant variant {variant!r}")


def G_skew_double_det(lam, mu, D: int, r: int | None = None, variant: str = "derived") -> SymFunc:
    """Determinant for G_{lam//mu} with entries
    sum_n {C(i-j+1, n) - Delta_ij(n)} beta^n G_{lam_i - mu_j - i + j + n}."""
    _check_variant(variant)
    lam, mu = make_partition(lam), make_partition(mu)
    r = r if r is not None else _default_r(lam, mu)
    if r < max(length(lam), length(mu)):
        raise ValueError(f"matrix size r={r} must be >= max(l(lam), l(mu))")

    def entry(i, j):
        mj = _part(mu, j)
        return _G_series(
            _part(lam, i) - mj - i + j,
            lambda n: binom(i - j + 1, n) - _delta(i, j, n, r, mj, variant),
            D,
        )

    res = _det(tabulate(r, entry), D)
    return res.with_grading(Grading(size(lam) - size(mu), -1))


def G_skew_single_det(lam, mu, D: int, r: int | None = None) -> SymFunc:
    """Determinant for G_{lam/mu}: entries sum_n C(i-j, n) beta^n G_{lam_i - mu_j - i + j + n}."""
    lam, mu = make_partition(lam), make_partition(mu)
    r = r if r is not None else _default_r(lam, mu)
    if r < max(length(lam), length(mu)):
        raise ValueError(f"matrix size r={r} must be >= max(l(lam), l(mu))")

    def entry(i, j):
        return _G_series(_part(lam, i) - _part(mu, j) - i + j, lambda n: binom(i - j, n), D)

    res = _det(tabulate(r, entry), D)
    return res.with_grading(Grading(size(lam) - size(mu), -1))


@lru_cache(maxsize=None)
def G_skew_single(lam: Partition, mu: Partition, D: int) -> SymFunc:
    """Cached G_{lam/mu} through its determinant."""
    return G_skew_single_det(lam, mu, D)


@lru_cache(maxsize=None)
def h_beta(p: int, i: int) -> SymFunc:
    """h_p^{(i)} = sum_k C(i, k) beta^k h_{p-k} (exact; h of negative index is 0)."""
    acc = zero(None)
    for k in range(0, p + 1):
        c = binom(i, k)
        if c:
            acc = acc + h_gen(p - k).scale(beta_power(k, c))
    return acc


@lru_cache(maxsize=None)
def H_beta(p: int, i: int) -> SymFunc:
    """H_p^{(i)} = sum_{n=0}^{i} C(i, n) beta^n h_{p+n}, for i >= 0 (exact)."""
    if i < 0:
        raise ValueError("H_p^{(i)} needs i >= 0")
    acc = zero(None)
    for n in range(i + 1):
        acc = acc + h_gen(p + n).scale(beta_power(n, binom(i, n)))
    return acc


def g_skew_det(lam, mu, r: int | None = None) -> SymFunc:
    """g_{lam/mu} = det( h^{(j-i)}_{lam_i - mu_j - i + j} )."""
    lam, mu = make_partition(lam), make_partition(mu)
    r = r if r is not None else _default_r(lam, mu)
    if r < length(lam):
        raise ValueError(f"matrix size r={r} must be >= l(lam)")
    res = _det(tabulate(r, lambda i, j: h_beta(_part(lam, i) - _part(mu, j) - i + j, j - i)), None)
    return res.with_grading(Grading(size(lam) - size(mu), 1))


def s_perp_g_det(lam, mu, r: int | None = None) -> SymFunc:
    """s_mu^perp g_lam = det( h^{(1-i)}_{lam_i - mu_j - i + j} )."""
    lam, mu = make_partition(lam), make_partition(mu)
    r = r if r is not None else _default_r(lam, mu)
    if r < length(lam):
        raise ValueError(f"matrix size r={r} must be >= l(lam)")
    res = _det(tabulate(r, lambda i, j: h_beta(_part(lam, i) - _part(mu, j) - i + j, 1 - i)), None)
    return res.with_grading(Grading(size(lam) - size(mu), 1))


def g_perp_g_det(lam, mu, r: int | None = None, variant: str = "derived") -> SymFunc:
    """g_mu^perp g_lam as an r x r determinant.

    Entries are sum_{n=0}^{mu_j-j+r} C(1-j, n) beta^n h^{(1-i)}_{lam_i-mu_j-i+j+n}.
    ``variant="printed"`` drops the beta^n and shifts the index by 2n.
    The result mixes degrees, so it carries no grading.
    """
    _check_variant(variant)
    lam, mu = make_partition(lam), make_partition(mu)
    r = r if r is not None else _default_r(lam, mu)
    if r < length(lam):
        raise ValueError(f"matrix size r={r} must be >= l(lam)")
    step, with_beta = (2, False) if variant == "printed" else (1, True)

    def entry(i, j):
        mj = _part(mu, j)
        acc = zero(None)
        for n in range(0, mj - j + r + 1):
            c = binom(1 - j, n)
            if c:
                scalar = beta_power(n, c) if with_beta else BetaPoly(c)
                acc = acc + h_beta(_part(lam, i) - mj - i + j + step * n, 1 - i).scale(scalar)
        return acc

    return _det(tabulate(r, entry), None)


def _s_perp_G_at(lam, mu, D: int, B: int, r: int, sign: int) -> SymFunc:
    """The s_mu^perp G_lam determinant with every entry cut at beta^B.

    ``sign`` is +1 for entries G_{m+k} and -1 for the printed G_{m-k}.
    """

    def entry(i, j):
        m = _part(lam, i) - _part(mu, j) - i + j
        acc = zero(D)
        for k in range(0, B + 1):
            idx = m + sign * k
            if idx > D:
                if sign > 0:
                    break
                continue
            # G_idx carries beta-degree >= max(0, -idx) on top of beta^k
            if k + max(0, -idx) > B:
                if sign < 0:
                    break
                continue
            c = sum(binom(r, n) * binom(i - r, k - n) for n in range(0, _part(mu, j) - j + r + 1))
            if c:
                acc = acc + G_index(idx, D).scale(beta_power(k, c))
        return acc.truncate_beta(B)

    return _det(tabulate(r, entry), D).truncate_beta(B)


def s_perp_G_det(
    lam, mu, D: int, beta_cutoff: int | None = None, r: int | None = None, variant: str = "derived"
) -> SymFunc:
    """s_mu^perp G_lam through its determinant, modulo beta^(B+1).

    Entries are sum_k sum_{n=0}^{mu_j-j+r} C(r,n) C(i-r,k-n) beta^k G_{m+k}
    with m = lam_i - mu_j - i + j.  Truncating mod beta^(B+1) is a ring map,
    so the determinant of cut entries is the cut determinant.  The default
    B is the largest beta-degree that survives below x-degree D.  The
    computation is repeated at B+1 and any change in a retained coefficient
    raises NonStabilizationError.

    ``variant="printed"`` uses G_{m-k}; negative indices then turn every
    entry into an infinite beta-series, and the result does not match the
    adjoint computation.
    """
    _check_variant(variant)
    lam, mu = make_partition(lam), make_partition(mu)
    r = r if r is not None else _default_r(lam, mu)
    if r < max(length(lam), length(mu)):
        raise ValueError(f"matrix size r={r} must be >= max(l(lam), l(mu))")
    sign = -1 if variant == "printed" else 1
    B = beta_cutoff if beta_cutoff is not None else max(0, D - size(lam) + size(mu))
    low = _s_perp_G_at(lam, mu, D, B, r, sign)
    high = _s_perp_G_at(lam, mu, D, B + 1, r, sign)
    if high.truncate_beta(B) != low:
        raise NonStabilizationError(f"s_{mu}^perp G_{lam}: coefficients changed between beta cutoffs {B} and {B + 1}")
    return low.with_grading(Grading(size(lam) - size(mu), -1))


def s_perp_G_finite_det(lam, mu, m: int, r: int | None = None) -> SymFunc:
    """s_mu^perp G_lam(x_1..x_m) = det( H^{(i-1)}_{lam_i - mu_j - i + j} ), for m <= r - l(mu)."""
    lam, mu = make_partition(lam), make_partition(mu)
    r = r if r is not None else max(length(lam), length(mu) + m, 1)
    if r < length(lam) or m > r - length(mu):
        raise ValueError(f"need r >= l(lam) and m <= r - l(mu); got r={r}, m={m}")
    res = _det(tabulate(r, lambda i, j: H_beta(_part(lam, i) - _part(mu, j) - i + j, i - 1)), None)
    return truncate_length(res, m).with_grading(Grading(size(lam) - size(mu), -1))


def finite_var_G_det(
    lam, mu, m: int, r: int, single: bool = False, variant: str = "derived"
) -> SymFunc:
    """G_{lam//mu}(x_1..x_m) (or G_{lam/mu} with ``single``) as
    det( sum_{k=0}^{mu_j-j+r} C(1-j, k) beta^k H^{(i-1)}_{lam_i-mu_j-i+j+k} ),
    with C(-j, k) in the single-slash case.  Requires m <= r - l(mu).

    The beta^k comes from regrouping the double sum
    sum_n sum_k C(1-j,k) C(i-1,n-k) beta^n h_{lam_i-mu_j-i+j+n} by n = k + n'.
    ``variant="printed"`` omits it; that form is not homogeneous.

    The determinant itself is the exact element g_mu^perp G^r_lam; the
    return value is its length-m truncation.
    """
    _check_variant(variant)
    lam, mu = make_partition(lam), make_partition(mu)
    if r < length(lam):
        raise ValueError(f"matrix size r={r} must be >= l(lam)")
    if m > r - length(mu):
        raise ValueError(f"number of variables m={m} exceeds r - l(mu) = {r - length(mu)}")
    if m < 0:
        raise ValueError("number of variables must be nonnegative")
    shift = 0 if single else 1

    def entry(i, j):
        mj = _part(mu, j)
        acc = zero(None)
        for k in range(0, mj - j + r + 1):
            c = binom(shift - j, k)
            if c:
                scalar = BetaPoly(c) if variant == "printed" else beta_power(k, c)
                acc = acc + H_beta(_part(lam, i) - mj - i + j + k, i - 1).scale(scalar)
        return acc

    res = _det(tabulate(r, entry), None)
    return truncate_length(res, m).with_grading(Grading(size(lam) - size(mu), -1))


def G_skew(lam, mu, D: int, single: bool = False) -> SymFunc:
    """Front door for either skew G."""
    lam, mu = make_partition(lam), make_partition(mu)
    return G_skew_single(lam, mu, D) if single else G_skew_double(lam, mu, D)
