import pytest
from hypothesis import given, settings, strategies as st

from skewgroth.betapoly import BETA, ONE, BetaPoly
from skewgroth.core import partitions_of, partitions_upto, rook_strip_predecessors, subpartitions
from skewgroth.grothendieck import (
    G_index,
    G_schur,
    G_skew,
    G_skew_double,
    G_skew_double_det,
    G_skew_single,
    G_skew_single_det,
    G_skew_single_rook,
    NonStabilizationError,
    finite_var_G_det,
    g_perp_g_det,
    g_schur,
    g_skew,
    g_skew_det,
    h_beta,
    s_perp_G_det,
    s_perp_G_finite_det,
    s_perp_g_det,
)
from skewgroth.symfunc import SymFunc, check_grading, hall_inner, perp, perp_schur, schur, truncate_length

B2 = BETA * BETA


def S(d):
    return SymFunc(d)


def pairs(n):
    return [(lam, mu) for lam in partitions_upto(n) for mu in subpartitions(lam)]


# -- straight shapes -------------------------------------------------------------


def test_G_of_one_box():
    assert G_schur((1,), 3) == S({(1,): 1, (1, 1): BETA, (1, 1, 1): B2})
    assert G_schur((), 5) == S({(): 1})


def test_G_of_one_row():
    # at D=3 the beta^2 term (degree 4) is cut off; D=4 keeps it
    assert G_schur((2,), 3) == S({(2,): 1, (2, 1): BETA})
    assert G_schur((2,), 4) == S({(2,): 1, (2, 1): BETA, (2, 1, 1): B2})


def test_g_small():
    assert g_schur((1,)) == schur((1,))
    assert g_schur(()) == S({(): 1})
    assert g_schur((2, 1)) == S({(2, 1): 1, (2,): -BETA})


@pytest.mark.parametrize("lam", partitions_upto(4))
def test_duality(lam):
    G = G_schur(lam, 4)
    for mu in partitions_upto(4):
        assert hall_inner(G, g_schur(mu)) == (ONE if mu == lam else 0)


def test_G_index():
    assert G_index(0, 3) == S({(): 1})
    assert G_index(-2, 3) == S({(): B2})
    assert G_index(1, 2) == S({(1,): 1, (1, 1): BETA})


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 5).flatmap(lambda n: st.sampled_from(partitions_of(n))))
def test_constructors_are_homogeneous(lam):
    assert check_grading(G_schur(lam, 7))
    assert check_grading(g_schur(lam))


# -- skew shapes, adjoint paths and determinants ---------------------------------


def test_double_slash_small_values():
    assert G_skew_double((3, 1), (), 5) == G_schur((3, 1), 5)
    # s_1^perp sends s_(1^k) to s_(1^(k-1)), so only one-column terms survive
    assert G_skew_double((1,), (1,), 2) == S({(): 1, (1,): BETA, (1, 1): B2})
    assert not G_skew_double((1,), (2,), 4)


@pytest.mark.parametrize("n", range(5))
def test_one_row_determinants(n):
    lam = (n,) if n else ()
    assert G_skew_double_det(lam, (), 5) == G_schur(lam, 5)
    assert G_skew_single_det(lam, (), 5) == G_schur(lam, 5)
    assert g_skew_det(lam, ()) == schur(lam)


@pytest.mark.parametrize("lam, mu", pairs(4))
def test_double_det_equals_adjoint(lam, mu):
    assert G_skew_double_det(lam, mu, 6) == G_skew_double(lam, mu, 6)


def test_double_det_frozen_value():
    expected = S(
        {(2, 1): 1, (3,): 1, (2, 1, 1): 2 * BETA, (2, 2): BETA, (3, 1): 3 * BETA}
    )
    assert G_skew_double_det((3, 1), (1,), 4) == expected


@pytest.mark.parametrize("extra", [1, 2])
def test_double_det_is_independent_of_r(extra):
    for lam, mu in pairs(4):
        r = max(len(lam), len(mu), 1) + extra
        assert G_skew_double_det(lam, mu, 5, r=r) == G_skew_double(lam, mu, 5)


def test_printed_double_det_disagrees():
    printed = G_skew_double_det((3, 1), (1,), 5, variant="printed")
    assert printed != G_skew_double((3, 1), (1,), 5)


@pytest.mark.parametrize("lam, mu", pairs(4))
def test_rook_strip_relation(lam, mu):
    total = SymFunc()
    for sigma, k in rook_strip_predecessors(mu):
        total = total + G_skew_single_det(lam, sigma, 6).scale(BetaPoly({k: 1}))
    assert total == G_skew_double(lam, mu, 6)


def test_single_slash_paths_agree():
    for lam, mu in pairs(4):
        assert G_skew_single(lam, mu, 5) == G_skew_single_rook(lam, mu, 5)
        assert G_skew(lam, mu, 5, single=True) == G_skew_single(lam, mu, 5)


@pytest.mark.parametrize("lam", [(1,), (2, 1), (3, 1), (2, 2)])
def test_single_slash_diagonal_is_one(lam):
    for D in (0, 3, 6):
        assert G_skew_single_det(lam, lam, D) == S({(): 1})


def test_single_slash_outside_containment():
    # the determinant stays meaningful when the inner shape sticks out
    assert G_skew_single_det((), (1,), 4) == S({(): -BETA})
    assert G_skew_single_det((), (1,), 4, r=3) == S({(): -BETA})


def test_g_skew_small():
    assert g_skew((3, 1), ()) == g_schur((3, 1))
    assert g_skew((3,), (1,)) == g_schur((2,))
    assert not g_skew((1,), (2,))
    assert g_skew_det((2, 1), (2, 1)) == S({(): 1})
    assert g_skew_det((2, 1), (1,)) == S({(2,): 1, (1, 1): 1})


def test_g_identity_for_s2():
    lhs = g_skew_det((2, 1), (1,)) - g_schur((1, 1)) - g_schur((1,)).scale(BETA)
    assert lhs == schur((2,))


@pytest.mark.parametrize("lam, mu", pairs(5))
def test_g_det_equals_adjoint(lam, mu):
    assert g_skew_det(lam, mu) == g_skew(lam, mu)


def test_h_beta():
    assert h_beta(3, 0) == schur((3,))
    assert h_beta(0, 4) == S({(): 1})
    assert h_beta(2, -1) == S({(2,): 1, (1,): -BETA, (): B2})


# -- perp determinants -----------------------------------------------------------


def test_s_perp_g_examples():
    assert s_perp_g_det((3, 1), ()) == g_schur((3, 1))
    assert s_perp_g_det((2, 1), (2, 1)) == S({(): 1})
    assert g_perp_g_det((2, 2), (1,)) == perp(g_schur((1,)), g_schur((2, 2)))


@pytest.mark.parametrize("lam, mu", pairs(4))
def test_perp_dets_equal_adjoint(lam, mu):
    assert s_perp_g_det(lam, mu) == perp_schur(mu, g_schur(lam))
    assert g_perp_g_det(lam, mu) == perp(g_schur(mu), g_schur(lam))
    ref = perp_schur(mu, G_schur(lam, 5 + sum(mu))).truncate_degree(5)
    assert s_perp_G_det(lam, mu, 5) == ref


def test_printed_perp_variants_disagree():
    assert g_perp_g_det((2, 1), (1, 1), variant="printed") != perp(g_schur((1, 1)), g_schur((2, 1)))
    ref = perp_schur((1,), G_schur((3, 1), 6)).truncate_degree(5)
    try:
        printed = s_perp_G_det((3, 1), (1,), 5, variant="printed")
    except NonStabilizationError:
        return
    assert printed != ref


# -- finitely many variables -----------------------------------------------------


def test_finite_variable_frozen_value():
    full = G_skew_double((3, 1), (1,), 12)
    got = finite_var_G_det((3, 1), (1,), 3, 4)
    assert got == truncate_length(full, 3)
    assert got[(3, 2, 2)] == BetaPoly({4: 2})


def test_finite_variable_trivia():
    assert finite_var_G_det((), (), 0, 1) == S({(): 1})
    assert finite_var_G_det((3,), (), 1, 1) == truncate_length(G_schur((3,), 6), 1)


@pytest.mark.parametrize("lam, mu", pairs(3))
def test_finite_variable_dets(lam, mu):
    for r in range(max(len(lam), 1), 4):
        for m in range(0, r - len(mu) + 1):
            D = sum(lam) + m * m
            for single in (False, True):
                full = G_skew_single_rook(lam, mu, D) if single else G_skew_double(lam, mu, D)
                assert finite_var_G_det(lam, mu, m, r, single=single) == truncate_length(full, m)
            ref = truncate_length(perp_schur(mu, G_schur(lam, D + sum(mu))).truncate_degree(D), m)
            assert s_perp_G_finite_det(lam, mu, m, r=max(r, len(mu) + m)) == ref


def test_printed_finite_variable_form_disagrees():
    printed = finite_var_G_det((1, 1), (1, 1), 1, 3, variant="printed")
    assert printed != truncate_length(G_skew_double((1, 1), (1, 1), 8), 1)
    printed = finite_var_G_det((1,), (1,), 1, 2, single=True, variant="printed")
    assert printed != truncate_length(G_skew_single_rook((1,), (1,), 8), 1)


def test_H_beta():
    from skewgroth.grothendieck import H_beta

    assert H_beta(1, 2) == S({(1,): 1, (2,): 2 * BETA, (3,): B2})
    with pytest.raises(ValueError):
        H_beta(1, -1)
