from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qpp.errors import (
    NonIntegralOffset,
    NonUnitConstantTerm,
    OrderExceeded,
    ZeroSubstitutionWithNegativeExponent,
)
from qpp.series import (
    BivarSeries,
    FracQSeries,
    LaurentPoly,
    QSeries,
    as_rational,
    assert_integral,
    series_from_json,
    series_to_json,
)

from strategies import bivar, laurent, orders, qseries, small_rat


def naive_mul(a, b):
    """Schoolbook product of coefficient lists, truncated to the shorter."""
    N = min(len(a), len(b))
    return [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(N)]


# --- LaurentPoly


def test_laurent_arithmetic_and_zero_cleanup():
    p = LaurentPoly({-1: 1, 0: 2})
    q = LaurentPoly({-1: -1, 3: Fraction(1, 2)})
    assert (p + q).terms() == {0: 2, 3: Fraction(1, 2)}
    assert (p * q)[-2] == -1
    assert p - p == 0


def test_laurent_negative_power_only_for_monomials():
    assert LaurentPoly({2: 3}) ** -2 == LaurentPoly({-4: Fraction(1, 9)})
    with pytest.raises(NonUnitConstantTerm):
        LaurentPoly({0: 1, 1: 1}) ** -1


def test_laurent_evaluate_and_diff():
    p = LaurentPoly({-2: 1, 1: 3})
    assert p.evaluate(2) == Fraction(1, 4) + 6
    assert p.diff() == LaurentPoly({-3: -2, 0: 3})
    with pytest.raises(ZeroSubstitutionWithNegativeExponent):
        p.evaluate(0)
    assert LaurentPoly({0: 5, 2: 1}).evaluate(0) == 5


def test_laurent_str():
    assert str(LaurentPoly({-1: -1, 0: 2, 2: Fraction(1, 3)})) == "-z^-1 + 2 + 1/3*z^2"
    assert str(LaurentPoly()) == "0"


def test_as_rational_rejects_floats():
    assert as_rational("3/4") == Fraction(3, 4)
    assert as_rational(Fraction(4, 2)) == 2 and isinstance(as_rational(Fraction(4, 2)), int)
    with pytest.raises(TypeError):
        as_rational(0.5)


# --- QSeries


def test_qseries_coeff_and_order_exceeded():
    s = QSeries([1, 2, 3])
    assert s.order == 2
    assert s.coeff(1) == 2
    with pytest.raises(OrderExceeded):
        s.coeff(3)


def test_mixed_orders_truncate_to_smaller():
    a = QSeries([1, 1, 1, 1, 1])
    b = QSeries([1, 1])
    assert (a + b).order == 1
    assert (a * b).order == 1


def test_geometric_series_inverse():
    # 1/(1-q) = 1 + q + q^2 + ...
    s = QSeries([1, -1], order=8).invert()
    assert s.coefficients == (1,) * 9
    assert QSeries.one(8).div_one_minus(1, 1) == s


def test_invert_needs_unit_constant_term():
    with pytest.raises(NonUnitConstantTerm):
        QSeries([0, 1, 2]).invert()
    assert QSeries([2, 1]).invert().coeff(0) == Fraction(1, 2)


def test_binomial_ops_match_general_product():
    s = QSeries([1, 2, -1, 0, 3, Fraction(1, 2)])
    factor = QSeries.from_terms({0: 1, 2: -Fraction(3, 2)}, 5)
    assert s.mul_one_minus(Fraction(3, 2), 2) == s * factor
    assert s.div_one_minus(Fraction(3, 2), 2) == s * factor.invert()


def test_q_derivative_dilate_dissect():
    s = QSeries([1, 2, 3, 4, 5, 6, 7])
    assert s.q_derivative().coefficients == (0, 2, 6, 12, 20, 30, 42)
    assert s.dilate(2).coefficients[:5] == (1, 0, 2, 0, 3)
    assert s.dissect(2, 1).coefficients == (2, 4, 6)


def test_json_round_trip():
    s = QSeries([0, Fraction(-3, 7), 5])
    rows = series_to_json(s)
    assert rows[0] == {"m": None, "n": 1, "num": "-3", "den": "7"}
    assert series_from_json(rows, 2) == s
    b = BivarSeries.from_terms({(-1, 0): 2, (3, 2): Fraction(1, 9)}, 2)
    assert series_from_json(series_to_json(b), 2) == b


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_qseries_ring_axioms(data):
    N = data.draw(orders)
    a, b, c = (data.draw(qseries(N)) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * QSeries.one(N) == a
    assert a + QSeries.zero(N) == a
    assert list((a * b).coefficients) == naive_mul(a.coefficients, b.coefficients)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_bivar_ring_axioms(data):
    N = data.draw(orders)
    a, b, c = (data.draw(bivar(N)) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * BivarSeries.one(N) == a
    assert a - a == BivarSeries.zero(N)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_leibniz_rule_for_diff_z(data):
    N = data.draw(st.integers(0, 8))
    a, b = data.draw(bivar(N)), data.draw(bivar(N))
    assert (a * b).diff_z() == a.diff_z() * b + a * b.diff_z()


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_invert_round_trip(data):
    N = data.draw(orders)
    a = data.draw(qseries(N))
    c0 = data.draw(small_rat.filter(bool))
    a = QSeries([c0] + list(a.coefficients[1:]))
    assert a * a.invert() == QSeries.one(N)
    # bivariate, with a monomial constant term c0 z^e
    e = data.draw(st.integers(-2, 2))
    b = data.draw(bivar(N))
    b = BivarSeries.from_terms({(e, 0): c0}, N) + b.shift_q(1)
    assert b * b.invert() == BivarSeries.one(N)


@given(qseries(6), small_rat, st.integers(1, 4))
def test_div_undoes_mul_one_minus(s, c, k):
    assert s.mul_one_minus(c, k).div_one_minus(c, k) == s


@given(bivar(5), small_rat, st.integers(-3, 3), st.integers(1, 3))
def test_bivar_div_undoes_mul_one_minus(s, c, e, k):
    assert s.mul_one_minus(c, e, k).div_one_minus(c, e, k) == s


@given(laurent(), laurent(), small_rat)
def test_laurent_evaluation_is_a_ring_map(p, q, v):
    if v == 0:
        return
    assert (p * q).evaluate(v) == p.evaluate(v) * q.evaluate(v)
    assert (p + q).evaluate(v) == p.evaluate(v) + q.evaluate(v)


# --- BivarSeries


def test_bivar_invert_rejects_non_monomial_constant():
    s = BivarSeries([LaurentPoly({0: 1, 1: 1})], order=3)
    with pytest.raises(NonUnitConstantTerm):
        s.invert()


def test_bivar_div_one_minus_q0_rules():
    s = BivarSeries.one(3)
    with pytest.raises(NonUnitConstantTerm):
        s.div_one_minus(1, 1, 0)
    assert s.div_one_minus(3, 0, 0) == s * Fraction(-1, 2)


def test_eval_z_and_zero_substitution():
    s = BivarSeries.from_terms({(-1, 1): 1, (2, 1): 1, (0, 0): 4}, 2)
    assert s.eval_z(2).coefficients == (4, Fraction(9, 2), 0)
    with pytest.raises(ZeroSubstitutionWithNegativeExponent):
        s.eval_z(0)


def test_shift_and_valuation():
    s = BivarSeries.monomial(1, 2, 3, 6)
    assert s.valuation() == 3
    assert s.shift_z(-2).coeff(0, 3) == 1
    assert s.shift_q(2).coeff(2, 5) == 1
    assert BivarSeries.zero(4).valuation() is None


# --- fractional offsets


def test_frac_offsets():
    a = FracQSeries(Fraction(1, 24), QSeries.one(3))
    b = FracQSeries(Fraction(-1, 24), QSeries([1, 1, 0, 0]))
    assert assert_integral(a * b) == QSeries([1, 1, 0, 0])
    with pytest.raises(NonIntegralOffset):
        assert_integral(a)
    with pytest.raises(NonIntegralOffset):
        FracQSeries(Fraction(1, 5), QSeries.one(1))
