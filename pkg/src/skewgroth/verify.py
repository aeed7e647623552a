"""Named identity suites.  Each check enumerates its cases, compares two
independent computations exactly and keeps the first few counterexamples."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable

from .betapoly import ONE
from .core import (
    conjugate,
    contains,
    count_ssyt,
    length,
    partitions_of,
    partitions_upto,
    size,
    subpartitions,
    tabulate,
    laplace_det,
)
from .grothendieck import (
    G_schur,
    G_skew_double,
    G_skew_double_det,
    G_skew_single_det,
    G_skew_single_rook,
    finite_var_G_det,
    g_perp_g_det,
    g_schur,
    g_skew,
    g_skew_det,
    s_perp_G_det,
    s_perp_G_finite_det,
    s_perp_g_det,
)
from .noncomm import (
    OpWord,
    SkewSum,
    apply_op,
    expand_sG_double,
    expand_sG_single,
    expand_sg,
    minimal_r,
    noncomm_schur_apply,
    perp_expand_G,
    perp_expand_g,
)
from .oracle import (
    bialternant_schur,
    eval_symfunc,
    eval_two_alphabet,
    identify_alphabets,
    ratio_formula_G,
)
from .symfunc import (
    Bisym,
    bisym_one,
    check_grading,
    hall_inner,
    multiply,
    perp,
    perp_schur,
    schur,
    super_e,
    super_schur,
    truncate_length,
)

MAX_REPORTED = 5


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, describe: Callable[[], str]) -> None:
        self.checked += 1
        if not ok and len(self.failures) < MAX_REPORTED:
            self.failures.append(describe())
        elif not ok:
            self.failures.append("")

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.checked} cases"
        if not self.passed:
            text += f", {len(self.failures)} failed"
        if self.note:
            text += f" ({self.note})"
        return text

    def details(self) -> list[str]:
        return [f for f in self.failures if f]


def _pairs(max_size: int) -> Iterable[tuple]:
    for lam in partitions_upto(max_size):
        for mu in subpartitions(lam):
            yield lam, mu


# -- duality -------------------------------------------------------------------


def check_duality(max_size: int) -> CheckResult:
    res = CheckResult(f"<G_lam, g_mu> = delta, |lam|,|mu| <= {max_size}")
    shapes = partitions_upto(max_size)
    for lam in shapes:
        G = G_schur(lam, max_size)
        for mu in shapes:
            value = hall_inner(G, g_schur(mu))
            expected = ONE if lam == mu else 0
            res.record(value == expected, lambda: f"lam={lam} mu={mu}: got {value.to_text()}")
    return res


# -- determinants ----------------------------------------------------------------


def check_double_det(max_size: int, D: int, extra_r: int = 0) -> CheckResult:
    name = f"double-slash determinant = adjoint, |lam| <= {max_size}, D = {D}"
    if extra_r:
        name += f", r up to minimal + {extra_r}"
    res = CheckResult(name)
    for lam, mu in _pairs(max_size):
        ref = G_skew_double(lam, mu, D)
        r0 = max(length(lam), length(mu), 1)
        for r in range(r0, r0 + extra_r + 1):
            got = G_skew_double_det(lam, mu, D, r=r)
            res.record(got == ref, lambda: f"lam={lam} mu={mu} r={r}: det-adjoint = {(got - ref).to_text()}")
    return res


def check_single_det(max_size: int, D: int) -> CheckResult:
    """sum over rook strips mu/sigma of beta^{|mu/sigma|} G_{lam/sigma} = G_{lam//mu},
    with every G_{lam/sigma} taken from its determinant."""
    from .core import rook_strip_predecessors
    from .betapoly import beta_power

    res = CheckResult(f"rook-strip relation for the single-slash determinant, |lam| <= {max_size}, D = {D}")
    for lam, mu in _pairs(max_size):
        acc = None
        for sigma, k in rook_strip_predecessors(mu):
            term = G_skew_single_det(lam, sigma, D).scale(beta_power(k))
            acc = term if acc is None else acc + term
        ref = G_skew_double(lam, mu, D)
        res.record(acc == ref, lambda: f"lam={lam} mu={mu}: difference {(acc - ref).to_text()}")
    return res


def check_finite_dets(max_size: int, max_r: int) -> CheckResult:
    """Finite-variable determinants against iota_m pi_m of the full objects.

    Every Schur term s_kappa of G_lam has kappa_i - lam_i <= i - 1, so the
    length <= m part of G_{lam//mu} (and of s_mu^perp G_lam) stops at degree
    |lam| + L(L-1)/2 with L = m + l(mu).  The reference is computed one degree
    past that, so a wrong bound would show up as a mismatch.
    """
    res = CheckResult(f"finite-variable determinants = length truncations, |lam| <= {max_size}, r <= {max_r}")
    for lam, mu in _pairs(max_size):
        for r in range(max(length(lam), 1), max_r + 1):
            for m in range(0, r - length(mu) + 1):
                L = m + length(mu)
                D = size(lam) + L * (L - 1) // 2 + 1
                for single in (False, True):
                    got = finite_var_G_det(lam, mu, m, r, single=single)
                    full = G_skew_single_rook(lam, mu, D) if single else G_skew_double(lam, mu, D)
                    res.record(
                        got == truncate_length(full, m),
                        lambda: f"lam={lam} mu={mu} r={r} m={m} single={single}",
                    )
                got = s_perp_G_finite_det(lam, mu, m, r=r)
                ref = truncate_length(perp_schur(mu, G_schur(lam, D + size(mu))).truncate_degree(D), m)
                res.record(got == ref, lambda: f"s-perp lam={lam} mu={mu} r={r} m={m}")
    return res


def check_g_det(max_size: int) -> CheckResult:
    res = CheckResult(f"g determinant = G_mu^perp g_lam, |lam| <= {max_size}")
    for lam, mu in _pairs(max_size):
        got, ref = g_skew_det(lam, mu), g_skew(lam, mu)
        res.record(got == ref, lambda: f"lam={lam} mu={mu}: difference {(got - ref).to_text()}")
    return res


def check_perp_dets(max_size: int, D: int) -> list[CheckResult]:
    sg = CheckResult(f"s_mu^perp g_lam determinant, |lam| <= {max_size}")
    gg = CheckResult(f"g_mu^perp g_lam determinant, |lam| <= {max_size}")
    sG = CheckResult(f"s_mu^perp G_lam determinant, |lam| <= {max_size}, x-degree <= {D}")
    for lam, mu in _pairs(max_size):
        got = s_perp_g_det(lam, mu)
        ref = perp_schur(mu, g_schur(lam))
        sg.record(got == ref, lambda: f"lam={lam} mu={mu}")
        got2 = g_perp_g_det(lam, mu)
        ref2 = perp(g_schur(mu), g_schur(lam))
        gg.record(got2 == ref2, lambda: f"lam={lam} mu={mu}")
        got3 = s_perp_G_det(lam, mu, D)  # raises NonStabilizationError on drift
        ref3 = perp_schur(mu, G_schur(lam, D + size(mu))).truncate_degree(D)
        sG.record(got3 == ref3, lambda: f"lam={lam} mu={mu}")
    sG.note = "beta cutoff B and B+1 agree on every case"
    return [sg, gg, sG]


def check_homogeneity(max_size: int, D: int) -> CheckResult:
    res = CheckResult(f"homogeneity of G/g constructor outputs, |lam| <= {max_size}")
    for lam in partitions_upto(max_size):
        for f in (G_schur(lam, D), g_schur(lam)):
            res.record(check_grading(f), lambda: f"lam={lam}")
    for lam, mu in _pairs(max_size):
        for f in (G_skew_double(lam, mu, D), G_skew_single_det(lam, mu, D), g_skew(lam, mu)):
            res.record(check_grading(f), lambda: f"lam={lam} mu={mu}")
    return res


# -- operator relations ----------------------------------------------------------


def _rel_elt(family: str, lam) -> SkewSum:
    # u and v move the outer shape, U and V the inner one; (lam, lam) is a
    # legal pair for the shrinking families
    return SkewSum.basis(lam, ()) if family in ("u", "v") else SkewSum.basis(lam, lam)


def knuth_patterns(n: int, reverse: bool) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Pairs of equal words in the Knuth (or reverse Knuth) relations over indices 1..n."""
    out = []
    for i, j, k in product(range(1, n + 1), repeat=3):
        if not reverse:
            if i <= j < k:
                out.append(((i, k, j), (k, i, j)))
            if i < j <= k:
                out.append(((j, i, k), (j, k, i)))
        else:
            if i >= j > k:
                out.append(((i, k, j), (k, i, j)))
            if i > j >= k:
                out.append(((j, i, k), (j, k, i)))
    return out


def check_knuth(max_size: int, n: int = 4) -> CheckResult:
    res = CheckResult(f"Knuth relations (u, v) and reverse Knuth relations (U, V), indices <= {n}, |lam| <= {max_size}")
    for family in ("u", "v", "U", "V"):
        pats = knuth_patterns(n, reverse=family in ("U", "V"))
        for lam in partitions_upto(max_size):
            elt = _rel_elt(family, lam)
            for w1, w2 in pats:
                a = OpWord(family, w1).apply(elt)
                b = OpWord(family, w2).apply(elt)
                res.record(a == b, lambda: f"{family} {w1} vs {w2} on {lam}")
    return res


def check_cross_commutation(max_size: int, n: int = 4) -> CheckResult:
    res = CheckResult(f"U_i u_j = u_j U_i and V_i v_j = v_j V_i, |lam| <= {max_size}")
    for lam, mu in _pairs(max_size):
        elt = SkewSum.basis(lam, mu)
        for i, j in product(range(1, n + 1), repeat=2):
            for big, small in (("U", "u"), ("V", "v")):
                a = apply_op(big, i, apply_op(small, j, elt))
                b = apply_op(small, j, apply_op(big, i, elt))
                res.record(a == b, lambda: f"{big}_{i} {small}_{j} on {lam}/{mu}")
    return res


def check_schur_commute(max_nu: int = 3, max_outer: int = 4, m: int = 3) -> CheckResult:
    res = CheckResult(f"s_a(u_{m}) s_b(u_{m}) = s_b(u_{m}) s_a(u_{m}), |a|,|b| <= {max_nu}")
    nus = [nu for nu in partitions_upto(max_nu) if nu]
    for lam in partitions_upto(max_outer):
        elt = SkewSum.basis(lam, ())
        first = {nu: noncomm_schur_apply("u", nu, m, elt) for nu in nus}
        for a, b in product(nus, repeat=2):
            if a >= b:
                continue
            ab = noncomm_schur_apply("u", a, m, first[b])
            ba = noncomm_schur_apply("u", b, m, first[a])
            res.record(ab == ba, lambda: f"a={a} b={b} on {lam}")
    return res


def check_supersymmetric(max_size: int = 3, m: int = 2) -> list[CheckResult]:
    jt = CheckResult(f"s_lam(x/y) = det(e_(lam'_i - i + j)(x/y)), |lam| <= {max_size}")
    cancel = CheckResult(f"s_lam(x/x) = delta_(lam, empty), |lam| <= {max_size}, {m}+{m} variables")
    for lam in partitions_upto(max_size):
        lamc = conjugate(lam)
        n = length(lamc)
        det = laplace_det(
            tabulate(n, lambda i, j: super_e(lamc[i - 1] - i + j)),
            bisym_one(),
            Bisym(),
        )
        jt.record(det == super_schur(lam), lambda: f"lam={lam}")
        value = identify_alphabets(eval_two_alphabet(super_schur(lam), m, m), m)
        expected = 1 if not lam else 0
        cancel.record(
            (value.terms == {(0,) * (2 * m): ONE}) if expected else not value,
            lambda: f"lam={lam}: {value.to_text()}",
        )
    return [jt, cancel]


# -- oracle ------------------------------------------------------------------------


def check_ratio_formula(max_size: int, nvars: Iterable[int], D: int) -> CheckResult:
    nvars = tuple(nvars)
    res = CheckResult(f"bialternant ratio = G_lam(x_1..x_n), |lam| <= {max_size}, n in {nvars}, degree <= {D}")
    for lam in partitions_upto(max_size):
        for n in nvars:
            if length(lam) > n:
                continue
            a = ratio_formula_G(lam, n).truncate(D)
            b = eval_symfunc(G_schur(lam, D), n).truncate(D)
            res.record(a == b, lambda: f"lam={lam} n={n}")
    return res


def check_bialternant(max_size: int, nvars: Iterable[int]) -> CheckResult:
    nvars = tuple(nvars)
    res = CheckResult(f"Jacobi-Trudi = bialternant for s_lam, |lam| <= {max_size}, n in {nvars}")
    for lam in partitions_upto(max_size):
        for n in nvars:
            res.record(bialternant_schur(lam, n) == eval_symfunc(schur(lam), n), lambda: f"lam={lam} n={n}")
    return res


def check_ssyt_counts(max_size: int, max_entry: int) -> CheckResult:
    res = CheckResult(f"tableau counts = s_lam(1,...,1), |lam| <= {max_size}, entries <= {max_entry}")
    for lam in partitions_upto(max_size):
        for m in range(1, max_entry + 1):
            p = eval_symfunc(schur(lam), m)
            value = sum((c for c in p.terms.values()), ONE - ONE)
            res.record(value == count_ssyt(lam, (), m), lambda: f"lam={lam} m={m}")
    return res


# -- expansions ----------------------------------------------------------------------


def check_expand_sg(max_nu: int, max_size: int) -> CheckResult:
    res = CheckResult(f"s_nu g_(lam/mu) expansion exact, |nu| <= {max_nu}, |lam| <= {max_size}, minimal r")
    for nu in partitions_upto(max_nu):
        for lam, mu in _pairs(max_size):
            r, _ = minimal_r("sg", nu, lam, mu)
            e = expand_sg(nu, lam, mu, r)
            ref = multiply(schur(nu), g_skew(lam, mu))
            got = e.realize()
            res.record(got == ref, lambda: f"nu={nu} lam={lam} mu={mu} r={r}")
    return res


def check_expand_sG(max_nu: int, max_size: int, single: bool) -> CheckResult:
    kind = "G/" if single else "G//"
    res = CheckResult(f"s_nu {kind} expansion mod I_(r-s), |nu| <= {max_nu}, |lam| <= {max_size}, minimal r, s")
    for nu in partitions_upto(max_nu):
        for lam, mu in _pairs(max_size):
            r, s = minimal_r("sG/" if single else "sG//", nu, lam, mu)
            D = size(lam) + size(nu) + 2
            e = (expand_sG_single if single else expand_sG_double)(nu, lam, mu, r, s)
            n = e.validity_mod
            base = G_skew_single_rook(lam, mu, D) if single else G_skew_double(lam, mu, D)
            ref = truncate_length(multiply(schur(nu, D), base), n)
            got = truncate_length(e.realize(D), n)
            res.record(got == ref, lambda: f"nu={nu} lam={lam} mu={mu} r={r} s={s}")
    return res


def check_perp_expansions(max_nu: int, max_size: int, D: int) -> list[CheckResult]:
    rg = CheckResult(f"s_nu^perp g_(lam/mu) expansion, |nu| <= {max_nu}, |lam| <= {max_size}")
    rG = CheckResult(f"s_nu^perp G_(lam/mu) expansion, |nu| <= {max_nu}, |lam| <= {max_size}, x-degree <= {D}")
    for nu in partitions_upto(max_nu):
        for lam, mu in _pairs(max_size):
            r, _ = minimal_r("perp", nu, lam, mu)
            r = max(r, 1)
            got = perp_expand_g(nu, lam, mu, r).realize()
            ref = perp_schur(nu, g_skew(lam, mu))
            rg.record(got == ref, lambda: f"nu={nu} lam={lam} mu={mu}")
            top = D + size(nu)
            gotG = perp_expand_G(nu, lam, mu, r).realize(top).truncate_degree(D)
            refG = perp_schur(nu, G_skew_single_rook(lam, mu, top)).truncate_degree(D)
            rG.record(gotG == refG, lambda: f"nu={nu} lam={lam} mu={mu}")
    return [rg, rG]


# -- suites --------------------------------------------------------------------------

SUITES = ("duality", "determinants", "expansions", "knuth", "oracle")


def run_suite(name: str, max_size: int = 4, degree: int | None = None, nvars: int = 3) -> list[CheckResult]:
    """Run one named suite ("all" runs every suite)."""
    if name == "all":
        out = []
        for s in SUITES:
            out.extend(run_suite(s, max_size, degree, nvars))
        return out
    D = degree if degree is not None else max_size + 2
    if name == "duality":
        return [check_duality(max_size)]
    if name == "determinants":
        return [
            check_double_det(max_size, D),
            check_single_det(max_size, D),
            check_finite_dets(min(max_size, 3), min(max_size, 4)),
            check_g_det(max_size),
            *check_perp_dets(max_size, D),
            check_homogeneity(max_size, D),
        ]
    if name == "expansions":
        nu_max = min(3, max_size)
        return [
            check_expand_sg(nu_max, max_size),
            check_expand_sG(nu_max, max_size, single=False),
            check_expand_sG(nu_max, max_size, single=True),
            *check_perp_expansions(nu_max, max_size, D),
        ]
    if name == "knuth":
        return [
            check_knuth(max_size),
            check_cross_commutation(max_size),
            check_schur_commute(min(3, max_size), max_size),
            *check_supersymmetric(min(3, max_size)),
        ]
    if name == "oracle":
        return [
            check_ratio_formula(max_size, range(1, nvars + 1), D),
            check_bialternant(max_size, range(1, nvars + 1)),
            check_ssyt_counts(max_size, nvars),
        ]
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")


__all__ = [
    "CheckResult",
    "SUITES",
    "run_suite",
    "check_duality",
    "check_double_det",
    "check_single_det",
    "check_finite_dets",
    "check_g_det",
    "check_perp_dets",
    "check_homogeneity",
    "check_knuth",
    "check_cross_commutation",
    "check_schur_commute",
    "check_supersymmetric",
    "check_ratio_formula",
    "check_bialternant",
    "check_ssyt_counts",
    "check_expand_sg",
    "check_expand_sG",
    "check_perp_expansions",
    "knuth_patterns",
    "partitions_of",
    "contains",
]
