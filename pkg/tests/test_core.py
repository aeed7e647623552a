from hypothesis import given, settings, strategies as st
import pytest

from skewgroth.core import (
    Tableau,
    binom,
    column_word,
    conjugate,
    contains,
    count_ssyt,
    enumerate_ssyt,
    is_rook_strip,
    laplace_det,
    make_partition,
    partitions_of,
    partitions_upto,
    prefix_min_closure,
    rook_strip_predecessors,
    subpartitions,
    suffix_max_closure,
    tabulate,
)

partitions = st.integers(0, 7).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def test_make_partition_strips_zeros():
    assert make_partition([3, 1, 0, 0]) == (3, 1)
    assert make_partition([]) == ()
    with pytest.raises(ValueError):
        make_partition([1, 2])
    with pytest.raises(ValueError):
        make_partition([2, -1])


@pytest.mark.parametrize("lam, expected", [((3, 1), (2, 1, 1)), ((), ()), ((2, 2), (2, 2))])
def test_conjugate_examples(lam, expected):
    assert conjugate(lam) == expected


@given(partitions)
def test_conjugate_is_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


@pytest.mark.parametrize(
    "lam, mu, expected", [((3, 1), (1,), True), ((3, 1), (2, 2), False), ((2, 2), (), True)]
)
def test_contains(lam, mu, expected):
    assert contains(lam, mu) is expected


def test_rook_strips():
    assert is_rook_strip((2, 1), (1,))
    assert not is_rook_strip((2,), ())
    assert is_rook_strip((1,), (1,))


@pytest.mark.parametrize(
    "mu, expected",
    [
        ((1,), [((1,), 0), ((), 1)]),
        ((), [((), 0)]),
        ((2, 2), [((2, 2), 0), ((2, 1), 1)]),
    ],
)
def test_rook_strip_predecessors(mu, expected):
    assert rook_strip_predecessors(mu) == expected


@given(partitions)
def test_rook_strip_predecessors_match_brute_force(mu):
    brute = {(s, sum(mu) - sum(s)) for s in subpartitions(mu) if is_rook_strip(mu, s)}
    assert set(rook_strip_predecessors(mu)) == brute


@pytest.mark.parametrize(
    "seq, expected",
    [((3, 1, 0, 1), ((3, 1, 1, 1), 1)), ((2, 3, 1), ((3, 3, 1), 1)), ((3, 1), ((3, 1), 0))],
)
def test_suffix_max_closure(seq, expected):
    assert suffix_max_closure(seq) == expected


@pytest.mark.parametrize(
    "seq, expected", [((3, 1, 2), ((3, 1, 1), 1)), ((2, 2), ((2, 2), 0)), ((1, 2, 2), ((1, 1, 1), 2))]
)
def test_prefix_min_closure(seq, expected):
    assert prefix_min_closure(seq) == expected


def test_closures_reject_steep_ascent():
    with pytest.raises(ValueError):
        suffix_max_closure((1, 3))
    with pytest.raises(ValueError):
        prefix_min_closure((0, 2))


@pytest.mark.parametrize("outer, inner, m, n", [((1,), (), 2, 2), ((2, 1), (), 3, 8), ((2, 1), (), 1, 0)])
def test_ssyt_counts(outer, inner, m, n):
    assert len(enumerate_ssyt(outer, inner, m)) == n


@settings(max_examples=40)
@given(partitions, st.integers(1, 3))
def test_enumerated_tableaux_are_semistandard_and_distinct(lam, m):
    ts = enumerate_ssyt(lam, (), m)
    assert all(t.is_semistandard() for t in ts)
    assert len(set(ts)) == len(ts)
    # hook-content formula for the number of tableaux with entries <= m
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    lamc = conjugate(lam)
    num = den = 1
    for i, j in cells:
        num *= m + j - i
        den *= (lam[i] - j - 1) + (lamc[j] - i - 1) + 1
    assert len(ts) == num // den


def test_column_word_of_displayed_tableau():
    t = Tableau((4, 3, 2, 1), (2, 1), ((1, 1), (1, 2), (3, 3), (4,)))
    assert t.is_semistandard()
    assert column_word(t) == (4, 3, 3, 1, 2, 1, 1)
    assert column_word(Tableau((1,), (), ((5,),))) == (5,)
    assert column_word(Tableau((2,), (1,), ((3,),))) == (3,)


def test_skew_counts_agree_with_brute_force():
    assert count_ssyt((2, 1), (1,), 2) == 4
    assert count_ssyt((1,), (2,), 3) == 0


def test_binom_general_upper_index():
    assert binom(-1, 3) == -1
    assert binom(-2, 2) == 3
    assert binom(2, 3) == 0
    assert binom(5, -1) == 0


def test_laplace_det():
    m = tabulate(3, lambda i, j: [[2, 0, 1], [1, 3, 2], [1, 1, 1]][i - 1][j - 1])
    assert laplace_det(m, 1, 0) == 2 * (3 - 2) - 0 + 1 * (1 - 3)
    assert laplace_det([], 1, 0) == 1


def test_partition_enumeration_counts():
    assert [len(partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert len(partitions_upto(4)) == 12
    assert sorted(subpartitions((2, 1))) == [(), (1,), (1, 1), (2,), (2, 1)]
