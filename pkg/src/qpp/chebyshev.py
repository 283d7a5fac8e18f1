"""Chebyshev polynomials of the second kind and the pentagonal coefficient formula.

``U_n(x)`` comes from the recurrence ``U_{n+1} = 2x U_n - U_{n-1}`` with
``U_0 = 1``, ``U_1 = 2x``, extended to negative n by ``U_{-1} = 0`` and
``U_{-n} = -U_{n-2}``.  At x = 1/2 the values are 6-periodic, which is the
only case the coefficient formula needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import is_pentagonal, pentagonal
from .errors import NotPentagonal
from .series import LaurentPoly, as_rational

_HALF = (1, 1, 0, -1, -1, 0)


def u_poly(n: int, x) -> Fraction:
    """U_n(x) by running the three-term recurrence upward from U_0, U_1."""
    x = Fraction(as_rational(x))
    if n < 0:
        return Fraction(0) if n == -1 else -u_poly(-n - 2, x)
    prev, cur = Fraction(1), 2 * x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


def u_half(n: int) -> int:
    """U_n(1/2) from the period-6 table."""
    if n < 0:
        return 0 if n == -1 else -u_half(-n - 2)
    return _HALF[n % 6]


def genfun_check(order: int) -> bool:
    """(sum_{m<=M} U_m(1/2) z^m)(1 - z + z^2) == 1 below z-degree M+1."""
    if order < 1:
        raise ValueError("order must be >= 1")
    partial = LaurentPoly({m: u_half(m) for m in range(order + 1)})
    prod = partial * LaurentPoly({0: 1, 1: -1, 2: 1})
    low = {e: c for e, c in prod.items() if e <= order}
    return low == {0: 1}


@dataclass(frozen=True)
class IntervalCase:
    case_id: str  # "I1".."I6" or "I1'".."I6'"
    sign_branch: int  # +1 for n = w_l with l >= 0, -1 for n = w_{-l} with l >= 1

    @property
    def index(self) -> int:
        return int(self.case_id[1])


def classify(m: int, n: int, ell: int) -> IntervalCase:
    """Place m in the six-interval partition of Z attached to n = w_ell.

    The interval endpoints are measured in L = |ell|, not in n: the
    coefficient row at n = w_ell is supported on |m| <= 3L, and the
    boundaries -3L, 3L+1 (resp. -3L+1, 3L) are where it changes shape.
    """
    if n < 0 or pentagonal(ell) != n:
        raise NotPentagonal(f"{n} is not w_{ell}")
    L = abs(ell)
    if ell >= 0:
        cuts = [(m < -3 * L, 1), (m == -3 * L, 2), (m < 1, 3), (m < 3 * L + 1, 4), (m == 3 * L + 1, 5)]
        branch, tag = 1, ""
    else:
        cuts = [(m <= -3 * L, 1), (m == -3 * L + 1, 2), (m < 1, 3), (m < 3 * L, 4), (m == 3 * L, 5)]
        branch, tag = -1, "'"
    for hit, k in cuts:
        if hit:
            return IntervalCase(f"I{k}{tag}", branch)
    return IntervalCase(f"I6{tag}", branch)


def branch_value(case: IntervalCase, m: int, L: int) -> int:
    """The closed form on one interval; L = |ell| plays the role of n."""
    U = u_half
    k = case.index
    sgn = -1 if L % 2 else 1
    if case.sign_branch > 0:
        if k == 1:
            return 0
        if k == 2:
            return U(1)
        if k == 3:
            return U(m + 3 * L + 1)
        if k == 4:
            return U(m + 3 * L + 1) + sgn * U(m - 1)
        if k == 5:
            return -U(1) + U(6 * L + 2) + sgn * U(3 * L)
        return -U(m - 3 * L) + U(m + 3 * L + 1) + sgn * U(m - 1)
    if k == 1:
        return 0
    if k == 2:
        return -U(1)
    if k == 3:
        return -U(m + 3 * L)
    if k == 4:
        return -U(m + 3 * L) + sgn * U(m - 1)
    if k == 5:
        return -U(6 * L) + U(1) + sgn * U(3 * L - 1)
    return -U(m + 3 * L) + U(m - 3 * L + 1) + sgn * U(m - 1)


def piecewise_coeff(m: int, n: int) -> int:
    """Coefficient of z^m q^n in (q)_inf times the overpartition-pair sum.

    Zero when n is not pentagonal.  The single-point cases I5/I5' are the
    I6/I6' expressions evaluated at that point; that agreement is asserted.
    """
    ell = is_pentagonal(n)
    if ell is None:
        return 0
    case = classify(m, n, ell)
    L = abs(ell)
    val = branch_value(case, m, L)
    if case.index == 5:
        six = IntervalCase("I6" + case.case_id[2:], case.sign_branch)
        assert val == branch_value(six, m, L)
    return val
