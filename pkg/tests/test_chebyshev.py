from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qpp.chebyshev import IntervalCase, branch_value, classify, genfun_check, piecewise_coeff, u_half, u_poly
from qpp.combinatorics import is_pentagonal, pentagonal, pentagonal_numbers_upto
from qpp.errors import NotPentagonal
from qpp.identities import pair_sum_series
from qpp.qtoolkit import euler

from strategies import small_rat


def series_row(n):
    """Row n of (q)_inf times the overpartition-pair sum, as {m: coeff}."""
    return (pair_sum_series(n) * euler(n))[n].terms()


def test_u_poly_small_cases():
    x = Fraction(3, 2)
    assert u_poly(0, x) == 1
    assert u_poly(1, x) == 3
    assert u_poly(2, x) == 4 * x * x - 1
    assert u_poly(3, x) == 8 * x**3 - 4 * x
    assert u_poly(-1, x) == 0
    assert u_poly(-2, x) == -1


def test_u_half_period():
    assert [u_half(n) for n in range(12)] == [1, 1, 0, -1, -1, 0] * 2
    assert [u_half(n) for n in range(-1, -7, -1)] == [0, -1, -1, 0, 1, 1]


@settings(max_examples=300)
@given(st.integers(-1000, 1000))
def test_u_half_agrees_with_recurrence(n):
    assert u_half(n) == u_poly(n, Fraction(1, 2))


def test_u_half_agrees_with_recurrence_exhaustively():
    assert all(u_half(n) == u_poly(n, Fraction(1, 2)) for n in range(-1000, 1001))


@given(small_rat, st.integers(0, 50))
def test_negative_index_rule(x, n):
    assert u_poly(-n - 2, x) == -u_poly(n, x)
    # the recurrence keeps holding across zero
    assert u_poly(-n, x) == 2 * x * u_poly(-n - 1, x) - u_poly(-n - 2, x)


def test_generating_function_check():
    assert genfun_check(1)
    assert genfun_check(60)
    with pytest.raises(ValueError):
        genfun_check(0)


def test_classify_nonnegative_branch():
    # n = 7 = w_2, L = 2
    assert classify(-7, 7, 2).case_id == "I1"
    assert classify(-6, 7, 2).case_id == "I2"
    assert classify(0, 7, 2).case_id == "I3"
    assert classify(1, 7, 2).case_id == "I4"
    assert classify(6, 7, 2).case_id == "I4"
    assert classify(7, 7, 2).case_id == "I5"
    assert classify(8, 7, 2) == IntervalCase("I6", 1)


def test_classify_negative_branch():
    # n = 5 = w_-2, L = 2
    assert classify(-6, 5, -2).case_id == "I1'"
    assert classify(-5, 5, -2).case_id == "I2'"
    assert classify(0, 5, -2).case_id == "I3'"
    assert classify(5, 5, -2).case_id == "I4'"
    assert classify(6, 5, -2) == IntervalCase("I5'", -1)
    assert classify(7, 5, -2).index == 6


def test_classify_rejects_wrong_index():
    with pytest.raises(NotPentagonal):
        classify(0, 3, 1)
    with pytest.raises(NotPentagonal):
        classify(0, 7, -2)


def test_piecewise_small_values():
    assert piecewise_coeff(0, 0) == 1
    assert piecewise_coeff(-2, 1) == -1
    assert piecewise_coeff(0, 3) == 0
    assert {m: piecewise_coeff(m, 0) for m in range(-5, 6) if piecewise_coeff(m, 0)} == {0: 1}


@pytest.mark.parametrize("n", [0, 1, 2, 5, 7, 12])
def test_piecewise_matches_series_row(n):
    row = series_row(n)
    got = {m: piecewise_coeff(m, n) for m in range(-3 * n - 5, 3 * n + 16)}
    assert {m: c for m, c in got.items() if c} == row


def test_nonpentagonal_rows_vanish():
    for n in (3, 4, 6, 8, 9, 10, 11):
        assert series_row(n) == {}
        assert all(piecewise_coeff(m, n) == 0 for m in range(-3 * n - 5, 3 * n + 16))


def test_first_interval_is_outside_the_support():
    for p in pentagonal_numbers_upto(100):
        L = abs(p.ell)
        for m in range(-3 * L - 20, -3 * L + 1):
            case = classify(m, p.value, p.ell)
            if case.index == 1:
                assert piecewise_coeff(m, p.value) == 0


def test_pentagonal_map_is_injective():
    seen = {}
    for ell in range(-300, 301):
        w = pentagonal(ell)
        assert w not in seen
        seen[w] = ell
    # w = 0 only from ell = 0, so n = 0 is never on the primed branch
    assert is_pentagonal(0) == 0


def test_reading_cuts_in_n_disagrees_with_the_series():
    # with n in place of |ell| the row at n = 5 would be classified against
    # cuts at -15, 16, and the I2 point would be -15 where the series is 0
    n, ell = 5, -2
    row = series_row(n)
    literal = IntervalCase("I2'", -1)
    assert branch_value(literal, -3 * n + 1, n) != row.get(-3 * n + 1, 0)
