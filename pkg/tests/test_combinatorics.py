from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qpp.combinatorics import (
    NTable,
    Overpartition,
    OverpartitionPair,
    a_odd,
    a_of_n,
    blocoeff_multisum,
    blorank_series,
    build_ntable,
    build_ntable_naive,
    enumerate_overpartitions,
    enumerate_pairs,
    idenp_lhs,
    idenp_rhs,
    is_pentagonal,
    is_self_conjugate,
    nmoment,
    pair_stats,
    partition_count,
    partitions,
    pentagonal,
    pentagonal_numbers_upto,
    rank_moment2,
    selfconj_count,
    spt_count,
    spt_series,
)
from qpp.errors import DivisionByZeroParameter, TableTooSmall
from qpp.series import BivarSeries


@pytest.fixture(scope="module")
def table():
    return build_ntable(15)


# --- partitions


def test_partition_numbers_known_values():
    assert [partition_count(n) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert partition_count(100) == 190569292
    assert partition_count(-3) == 0


def test_partition_count_matches_enumeration():
    for n in range(16):
        assert partition_count(n) == sum(1 for _ in partitions(n))


def test_selfconj_equals_distinct_odd_parts():
    for n in range(20):
        by_conj = sum(1 for p in partitions(n) if is_self_conjugate(p))
        assert selfconj_count(n) == by_conj
    assert selfconj_count(-1) == 0


def test_spt_known_values():
    # total number of smallest parts: 1, 3, 5, 10, 14, 26, 35, 57, 80, 119
    want = [0, 1, 3, 5, 10, 14, 26, 35, 57, 80, 119]
    assert [spt_count(n) for n in range(11)] == want
    assert list(spt_series(10).coefficients) == want


def test_spt_via_second_rank_moment():
    for n in range(1, 26):
        assert spt_count(n) == n * partition_count(n) - Fraction(rank_moment2(n), 2)


def test_a_of_n_and_odd_companion():
    assert a_of_n(0) == 1
    # a(1) = p(0)p(2) - p(1)p(1) + p(2)p(0) = 2 - 1 + 2
    assert a_of_n(1) == 3
    assert all(a_odd(n) == 0 for n in range(30))


# --- overpartitions


def test_overpartition_counts():
    # overpartitions of n: 1, 2, 4, 8, 14, 24, 40
    assert [len(enumerate_overpartitions(n)) for n in range(7)] == [1, 2, 4, 8, 14, 24, 40]


def test_overpartition_validation():
    with pytest.raises(ValueError):
        Overpartition((1, 2))
    with pytest.raises(ValueError):
        Overpartition((2, 1), frozenset({3}))
    assert str(Overpartition((2, 2, 1), frozenset({2}))) == "(2',2,1)"


def test_pair_count_matches_product():
    # pairs of n: coefficients of (-q)_inf^2/(q)_inf^2
    assert [sum(1 for _ in enumerate_pairs(n)) for n in range(5)] == [1, 4, 12, 32, 76]


def test_pair_stats_examples():
    one = Overpartition((1,))
    one_bar = Overpartition((1,), frozenset({1}))
    empty = Overpartition(())
    # largest part 1 sits only in mu, non-overlined: chi = 1
    st_ = pair_stats(OverpartitionPair(empty, one))
    assert (st_.r, st_.s, st_.rank) == (1, 1, 0)
    st_ = pair_stats(OverpartitionPair(one_bar, empty))
    assert (st_.r, st_.s, st_.rank) == (1, 0, 0)
    st_ = pair_stats(OverpartitionPair(empty, Overpartition((1, 1))))
    assert st_.rank == 0


def test_fast_table_equals_naive(table):
    naive = build_ntable_naive(8)
    fast = build_ntable(8)
    assert fast.counts == naive.counts
    assert all(table.total(n) == fast.total(n) for n in range(9))


def test_table_guard(table):
    with pytest.raises(TableTooSmall):
        build_ntable(3).corblo_row(4)
    assert table[(99, 0, 0, 1)] == 0


@pytest.mark.parametrize("d,e", [(1, 1), (2, 1), (Fraction(1, 2), 3), (-3, Fraction(5, 7))])
def test_table_reproduces_rank_generating_function(table, d, e):
    assert blorank_series(d, e, 8) == table.generating_series(d, e, 8)


def test_blorank_rejects_zero_parameter():
    with pytest.raises(DivisionByZeroParameter):
        blorank_series(0, 1, 3)


def literal_rank_table(max_n):
    """N(r,s,m,n) with the rank read as l - #parts(lambda) - #parts(mu) - chi."""
    counts = Counter()
    for n in range(max_n + 1):
        for pair in enumerate_pairs(n):
            lam, mu = pair.lam, pair.mu
            st_ = pair_stats(pair)
            if not lam.parts and not mu.parts:
                counts[(st_.r, st_.s, 0, n)] += 1
                continue
            top = max(lam.largest, mu.largest)
            chi = int(mu.largest == top and lam.largest < top and top not in mu.overlined)
            counts[(st_.r, st_.s, top - len(lam.parts) - len(mu.parts) - chi, n)] += 1
    return NTable(max_n, dict(counts))


def test_counting_all_mu_parts_does_not_reproduce_the_generating_function():
    literal = literal_rank_table(3)
    want = blorank_series(1, 1, 3)
    got = literal.generating_series(1, 1, 3)
    # already the single-part pairs (1), (1') disagree: mu = (1) gets rank -1
    assert got[1] != want[1]
    assert got.eval_z(1) == want.eval_z(1)


def test_rank_symmetry_per_entry(table):
    # z -> 1/z leaves the rank generating function fixed for every (d, e)
    assert all(table[(r, s, -m, n)] == c for (r, s, m, n), c in table.counts.items())


def test_shifted_symmetry_holds_only_after_the_signed_sum(table):
    shifted_bad = [
        (r, s, m, n)
        for (r, s, _, n) in table.counts
        for m in range(-3 * n - 3, 3 * n + 4)
        if table[(r, s, m - 2 * s + 2 * r, n)] != table[(r, s, -m - 2 * s + 2 * r, n)]
    ]
    assert (0, 1, 2, 1) in shifted_bad
    for n in range(16):
        row = table.corblo_row(n)
        assert all(row.get(-m, 0) == v for m, v in row.items())


# --- pentagonal helpers and multisums


def test_pentagonal_numbers():
    assert [p.value for p in pentagonal_numbers_upto(26)] == [0, 1, 2, 5, 7, 12, 15, 22, 26]
    assert [pentagonal(ell) for ell in (0, -1, 1, -2, 2)] == [0, 1, 2, 5, 7]
    assert is_pentagonal(3) is None and is_pentagonal(-1) is None


@given(st.integers(-200, 200))
def test_pentagonal_index_is_injective(ell):
    assert is_pentagonal(pentagonal(ell)) == ell


def test_multisum_at_origin(table):
    assert blocoeff_multisum(0, 0, table) == 1
    with pytest.raises(TableTooSmall):
        blocoeff_multisum(0, 16, table)


def test_fourth_moment_identity(table):
    want = [5, 6, 9, -2, 1, 0, -13, -14, 0, -10, -22, 6, -27, 18, 0]
    assert [idenp_rhs(n) for n in range(1, 16)] == want
    assert [idenp_lhs(n, table) for n in range(1, 16)] == want


def test_falling_factorial_weight_gives_the_same_moment(table):
    for n in range(16):
        assert nmoment(n, table, "falling") == nmoment(n, table, "m2")


def test_printed_weight_does_not_balance(table):
    assert all(idenp_lhs(n, table, "printed") != idenp_rhs(n) for n in range(1, 16))


def test_signed_row_sum_series(table):
    s = table.corblo_series(4)
    assert isinstance(s, BivarSeries)
    assert all(s[n].terms() == {m: c for m, c in table.corblo_row(n).items() if c} for n in range(5))
