"""Registry of named identity checks.

Every check turns into a list of ``(lhs, rhs)`` pairs of truncated series
(``QSeries`` or ``BivarSeries``).  A finite family of values indexed by n,
such as a congruence sweep, is packed into a ``QSeries`` too, so comparison,
mismatch reporting and fault injection work the same way everywhere.

Right sides that are rational in z are multiplied through by a Laurent
polynomial so that both sides are honest bivariate series; the multiplier is
kept in ``IdentityCheck.multiplier``.  Where clearing is used, the uncleared
form is also checked at a few rational values of z.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable

from .chebyshev import piecewise_coeff
from .combinatorics import (
    a_odd,
    a_of_n,
    blocoeff_multisum,
    blorank_series,
    build_ntable,
    idenp_lhs,
    idenp_rhs,
    partition_count,
    rank_moment2,
    selfconj_count,
    spt_count,
    spt_series,
)
from .errors import UnknownCheckId
from .qtoolkit import (
    Monomial,
    chain_terms,
    eta_quotient,
    euler,
    gordon_series,
    jtp_square_series,
    lambert_all,
    lambert_even,
    lambert_odd,
    mul_poch,
    pentagonal_series,
    psi_series,
    qpoch,
    quintuple_lhs,
    quintuple_lhs_full,
    sum_bivariate_terms,
    theta_shimura,
    unary_theta,
)
from .series import (
    BivarSeries,
    FracQSeries,
    LaurentPoly,
    QSeries,
    as_rational,
    assert_integral,
    frac_div,
)

F = Fraction
Z_SAMPLES = (F(2), F(-1, 3), F(5, 2))


@dataclass(frozen=True)
class Mismatch:
    m: int | None
    n: int
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class IdentityReport:
    id: str
    passed: bool
    order_checked: int
    first_mismatch: Mismatch | None
    elapsed_ms: int

    def to_dict(self) -> dict:
        fm = None
        if self.first_mismatch is not None:
            x = self.first_mismatch
            fm = {"m": x.m, "n": x.n, "lhs": _fmt(x.lhs), "rhs": _fmt(x.rhs)}
        return {
            "id": self.id,
            "pass": self.passed,
            "order": self.order_checked,
            "first_mismatch": fm,
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass(frozen=True)
class Perturbation:
    """Add ``delta`` to the (m, n) coefficient of one side of every comparison."""

    n: int
    m: int | None = None
    delta: object = 1
    side: str = "rhs"


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    description: str
    anchor: str
    default_order: int
    build: Callable[[int], list]
    cap: int | None = None  # enumeration-backed checks never go beyond this
    fixed: int | None = None  # sweeps with a fixed range ignore the order
    multiplier: str | None = None

    def effective_order(self, order: int) -> int:
        if self.fixed is not None:
            return self.fixed
        return order if self.cap is None else min(order, self.cap)


def _fmt(c) -> str:
    c = F(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# ---------------------------------------------------------------------------
# comparison


def _as_bivar(s):
    return s.to_bivar() if isinstance(s, QSeries) else s


def first_mismatch(lhs, rhs, order: int | None = None) -> Mismatch | None:
    """Least (n, m) where the two series differ, up to the common order."""
    N = min(lhs.order, rhs.order) if order is None else order
    if lhs.order < N or rhs.order < N:
        raise ValueError(f"side built to order {min(lhs.order, rhs.order)} < {N}")
    if isinstance(lhs, QSeries) and isinstance(rhs, QSeries):
        for n in range(N + 1):
            a, b = lhs[n], rhs[n]
            if a != b:
                return Mismatch(None, n, F(a), F(b))
        return None
    lhs, rhs = _as_bivar(lhs), _as_bivar(rhs)
    for n in range(N + 1):
        a, b = lhs[n], rhs[n]
        if a != b:
            for m in sorted(set(a.terms()) | set(b.terms())):
                if a[m] != b[m]:
                    return Mismatch(m, n, F(a[m]), F(b[m]))
    return None


def _perturb(s, p: Perturbation):
    if p.n > s.order:
        return s
    if isinstance(s, QSeries):
        return s + QSeries.from_terms({p.n: p.delta}, s.order)
    return s + BivarSeries.monomial(p.delta, p.m or 0, p.n, s.order)


def _key(x: Mismatch):
    return (x.n, float("-inf") if x.m is None else x.m)


def compare_all(pairs: list, order: int | None = None, perturb: Perturbation | None = None):
    best = None
    for lhs, rhs in pairs:
        if perturb is not None:
            if perturb.side == "lhs":
                lhs = _perturb(lhs, perturb)
            else:
                rhs = _perturb(rhs, perturb)
        mm = first_mismatch(lhs, rhs, order)
        if mm is not None and (best is None or _key(mm) < _key(best)):
            best = mm
    return best


# ---------------------------------------------------------------------------
# shared, memoised building blocks


@lru_cache(maxsize=None)
def _qinf(N: int) -> QSeries:
    return euler(N)


@lru_cache(maxsize=None)
def _table(n: int):
    return build_ntable(n)


def _seq(values) -> QSeries:
    return QSeries(list(values))


def _lp(d: dict) -> LaurentPoly:
    return LaurentPoly(d)


def _zero_term(order: int, like=QSeries):
    return like.zero(order)


def with_head(s, a: Monomial, power: int = 1):
    """s * (a; q^step)_inf ** power when a has q-exponent 0.

    The j = 0 factor ``1 - a`` is applied on its own and the rest is the
    convergent product starting at q^step.
    """
    for _ in range(abs(power)):
        if isinstance(s, QSeries):
            s = s.mul_one_minus(a.scalar, 0) if power > 0 else s.div_one_minus(a.scalar, 0)
        else:
            if power > 0:
                s = s.mul_one_minus(a.scalar, a.z_exp, 0)
            else:
                s = s.div_one_minus(a.scalar, a.z_exp, 0)
    tail = Monomial(a.scalar, a.z_exp, a.q_step, a.q_step)
    return mul_poch(s, tail, None, power)


def _poch(s, factors):
    for a, k in factors:
        s = with_head(s, a, k) if a.q_exp == 0 else mul_poch(s, a, None, k)
    return s


def _qprod(N: int, factors) -> QSeries:
    return _poch(QSeries.one(N), factors)


def _bprod(N: int, factors) -> BivarSeries:
    return _poch(BivarSeries.one(N), factors)


def m1(c=1, *, z=0, q=0, step=1) -> Monomial:
    return Monomial(c, z, q, step)


@lru_cache(maxsize=None)
def pair_sum_series(order: int) -> BivarSeries:
    """sum_n (z^2;q)_n (z^-2;q)_n q^n / ((-zq;q)_n (-q/z;q)_n)."""

    def step(prev, n):
        t = prev.mul_one_minus(1, 2, n - 1).mul_one_minus(1, -2, n - 1).shift_q(1)
        return t.div_one_minus(-1, 1, n).div_one_minus(-1, -1, n)

    return sum_bivariate_terms(chain_terms(BivarSeries.one(order), step), order)


def pair_sum_at(zval, order: int) -> QSeries:
    """pair_sum_series with z fixed to a nonzero rational."""
    z = F(as_rational(zval))

    def step(prev, n):
        t = prev.mul_one_minus(z * z, n - 1).mul_one_minus(1 / (z * z), n - 1).shift_q(1)
        return t.div_one_minus(-z, n).div_one_minus(-1 / z, n)

    return sum_bivariate_terms(chain_terms(QSeries.one(order), step), order)


@lru_cache(maxsize=None)
def dzq_series(order: int) -> BivarSeries:
    """(zq, q/z; q)_inf (z^2 q, z^-2 q; q^2)_inf"""
    return _bprod(
        order,
        [(m1(z=1, q=1), 1), (m1(z=-1, q=1), 1), (m1(z=2, q=1, step=2), 1), (m1(z=-2, q=1, step=2), 1)],
    )


@lru_cache(maxsize=None)
def theta_product(order: int) -> BivarSeries:
    """(zq, q/z; q)_inf"""
    return _bprod(order, [(m1(z=1, q=1), 1), (m1(z=-1, q=1), 1)])


def derivative_at_one(f: BivarSeries, k: int) -> QSeries:
    for _ in range(k):
        f = f.diff_z()
    return f.eval_z(1)


def _sum_from_one(first_term, step, order: int, like=QSeries):
    """sum_{n>=1} t_n with t_1 = first_term and t_n = step(t_{n-1}, n)."""
    one = chain_terms(first_term, lambda prev, k: step(prev, k + 1))

    def term(n):
        return like.zero(order) if n == 0 else one(n - 1)

    return sum_bivariate_terms(term, order)


# ---- the A and B series shared by several checks


@lru_cache(maxsize=None)
def _a_terms(order: int):
    """t_n = (q)_{n-1}^2 q^n / (-q)_n^2 for n = 0..order (t_0 = 0)."""
    out = [QSeries.zero(order)]
    t = QSeries.one(order).shift_q(1).div_one_minus(-1, 1).div_one_minus(-1, 1)
    for n in range(1, order + 1):
        if n > 1:
            t = t.mul_one_minus(1, n - 1).mul_one_minus(1, n - 1).shift_q(1)
            t = t.div_one_minus(-1, n).div_one_minus(-1, n)
        out.append(t)
    return tuple(out)


def series_a(order: int) -> QSeries:
    """sum_{n>=1} (q)_{n-1}^2 q^n / (-q)_n^2"""
    return sum(_a_terms(order)[1:], QSeries.zero(order))


@lru_cache(maxsize=None)
def series_b(order: int) -> QSeries:
    """sum_n t_n (sum_{k<n} q^k (5+6q^k+5q^{2k})/(1-q^{2k})^2 + q^n/(1+q^n)^2)."""
    N = order
    terms = _a_terms(N)
    inner = QSeries.zero(N)
    total = QSeries.zero(N)
    for n in range(1, N + 1):
        if n > 1:
            k = n - 1
            x = QSeries.from_terms({k: 5, 2 * k: 6, 3 * k: 5}, N)
            inner = inner + x.div_one_minus(1, 2 * k).div_one_minus(1, 2 * k)
        last = QSeries.one(N).shift_q(n).div_one_minus(-1, n).div_one_minus(-1, n)
        total = total + terms[n] * (inner + last)
    return total


def _lambert_mix(N: int) -> QSeries:
    """3 sum n q^n/(1-q^n) + 2 sum (2n-1) q^(2n-1)/(1-q^(2n-1))"""
    return lambert_all(N) * 3 + lambert_odd(N) * 2


def _q_qsq(N: int) -> QSeries:
    """(q; q^2)_inf"""
    return qpoch(m1(q=1, step=2), N)


# ---------------------------------------------------------------------------
# check builders; each returns a list of (lhs, rhs)


def _pentagonal(N):
    return [(_qinf(N), pentagonal_series(N))]


def _gf_spt_new(N):
    def term(n):
        if n == 0:
            return QSeries.zero(N)
        t = QSeries.one(N).shift_q(n).div_one_minus(1, n).div_one_minus(1, n)
        return mul_poch(t, m1(q=n + 1), None, -1)

    lhs = sum_bivariate_terms(term, N)
    inv = _qinf(N).invert()
    tail = QSeries.zero(N)
    k = 1
    while k * (3 * k + 1) // 2 <= N:
        e = k * (3 * k + 1) // 2
        t = QSeries.from_terms({e: (-1) ** k, e + k: (-1) ** k}, N)
        tail = tail + t.div_one_minus(1, k).div_one_minus(1, k)
        k += 1
    rhs = inv * lambert_all(N) + inv * tail
    return [(lhs, rhs), (lhs, spt_series(N))]


def _watson(N):
    def step(prev, n):
        t = prev.mul_one_minus(1, 1, n - 1).mul_one_minus(1, -1, n - 1).shift_q(1)
        return t.div_one_minus(1, 0, n)

    lhs = sum_bivariate_terms(chain_terms(BivarSeries.one(N), step), N)
    ratio = _lp({0: 2, 1: -1, -1: -1})  # (1-z)(1-1/z)
    bracket = BivarSeries.one(N)
    n = 1
    while n * (3 * n + 1) // 2 <= N:
        e = n * (3 * n + 1) // 2
        s = (-1) ** n
        t = BivarSeries.from_terms({(0, e): s, (0, e + n): s}, N) * ratio
        bracket = bracket + t.div_one_minus(1, 1, n).div_one_minus(1, -1, n)
        n += 1
    pre = mul_poch(theta_product(N), m1(q=1), None, -2)
    return [(lhs, pre * bracket)]


def _diff2(N):
    lhs = derivative_at_one(theta_product(N), 2) * F(-1, 2)
    return [(lhs, _qinf(N) * _qinf(N) * lambert_all(N))]


def _dzq_forms(N):
    rhs = _bprod(N, [(m1(z=2, q=1), 1), (m1(z=-2, q=1), 1), (m1(-1, z=1, q=1), -1), (m1(-1, z=-1, q=1), -1)])
    return [(dzq_series(N), rhs)]


MAIN_ID_GRID = (
    (F(2), F(3), F(5)),
    (F(1, 2), F(-1), F(1, 3)),
    (F(-3), F(7), F(2, 5)),
    (F(5, 2), F(-2, 3), F(-1, 7)),
    (F(3), F(11, 2), F(-5)),
    (F(1, 3), F(2), F(7)),
)


def main_id_sides(alpha, beta, gamma, N):
    a, b, g = (F(as_rational(x)) for x in (alpha, beta, gamma))
    if b in (0, 1):
        raise ValueError("beta must avoid 0 and 1")
    d = a * g / b

    def step(prev, n):
        t = prev.mul_one_minus(a, n - 1).mul_one_minus(g, n - 1).shift_q(1)
        return t.div_one_minus(b, n - 1).div_one_minus(d, n + 1)

    lhs = sum_bivariate_terms(chain_terms(QSeries.one(N), step), N)
    inf = _qprod(N, [(m1(a), 1), (m1(g), 1), (m1(b), -1), (m1(d, q=2), -1)])
    first = inf.shift_q(1).div_one_minus(a / b, 1).div_one_minus(g / b, 1) * (1 / b)
    second = QSeries.one(N).mul_one_minus(1 / b, 1).mul_one_minus(d, 1)
    second = second.div_one_minus(g / b, 1).div_one_minus(a / b, 1)
    return lhs, first + second


def _main_id(N):
    return [main_id_sides(a, b, g, N) for a, b, g in MAIN_ID_GRID]


X_GRID = (F(2), F(1, 2), F(-3))


def _chan_mao_1(N):
    out = []
    for x in X_GRID:

        def step(prev, n, x=x):
            t = prev.mul_one_minus(x, 0, n - 1).mul_one_minus(1 / x, 0, n - 1).shift_q(1)
            return t.div_one_minus(1, 1, n).div_one_minus(1, -1, n)

        lhs = sum_bivariate_terms(chain_terms(BivarSeries.one(N), step), N)
        mult = _lp({0: 1, 1: -(x + 1 / x), 2: 1})  # (1 - z/x)(1 - xz)
        prod = _bprod(N, [(m1(x), 1), (m1(1 / x), 1), (m1(z=1, q=1), -1), (m1(z=-1, q=1), -1)])
        rhs = BivarSeries.coerce(_lp({0: 1, 1: -2, 2: 1}), N) + prod.shift_z(1)
        out.append((lhs * mult, rhs))
        for z in Z_SAMPLES:
            if z in (x, 1 / x):
                continue

            def zstep(prev, n, x=x, z=z):
                t = prev.mul_one_minus(x, n - 1).mul_one_minus(1 / x, n - 1).shift_q(1)
                return t.div_one_minus(z, n).div_one_minus(1 / z, n)

            zl = sum_bivariate_terms(chain_terms(QSeries.one(N), zstep), N)
            den = (1 - z / x) * (1 - x * z)
            zp = _qprod(N, [(m1(x), 1), (m1(1 / x), 1), (m1(z, q=1), -1), (m1(1 / z, q=1), -1)])
            out.append((zl, QSeries.constant((1 - z) ** 2 / den, N) + zp * (z / den)))
    return out


def _chan_mao_2(N):
    out = []
    for x in X_GRID:

        def step(prev, n, x=x):
            t = prev.mul_one_minus(x, 0, n - 1).mul_one_minus(1 / x, 0, n).shift_q(1)
            return t.div_one_minus(1, 1, n).div_one_minus(1, -1, n + 1)

        first = BivarSeries.one(N).div_one_minus(1, -1, 1)
        lhs = sum_bivariate_terms(chain_terms(first, step), N) * _lp({0: 1, 1: -1 / x})
        pole = BivarSeries.one(N).div_one_minus(1 / x, -1, 1)  # 1/(1 - q/(xz))
        prod = _poch(pole, [(m1(x), 1), (m1(1 / x, q=1), 1), (m1(z=1, q=1), -1), (m1(z=-1, q=1), -1)])
        rhs = pole * _lp({0: 1 / x, 1: -1 / x}) - prod * (1 / x)
        out.append((lhs, rhs))
        for z in Z_SAMPLES:
            if z == x:
                continue

            def zstep(prev, n, x=x, z=z):
                t = prev.mul_one_minus(x, n - 1).mul_one_minus(1 / x, n).shift_q(1)
                return t.div_one_minus(z, n).div_one_minus(1 / z, n + 1)

            zfirst = QSeries.one(N).div_one_minus(z, 0).div_one_minus(1 / z, 1)
            zl = sum_bivariate_terms(chain_terms(zfirst, zstep), N)
            zpole = QSeries.one(N).div_one_minus(1 / (x * z), 1)
            a = zpole * (1 / (x * (1 - z / x)))
            b = _poch(zpole, [(m1(x), 1), (m1(1 / x, q=1), 1), (m1(z), -1), (m1(1 / z, q=1), -1)])
            out.append((zl, a + b * (1 / (z * (1 - x / z)))))
    return out


def _dtilde(N):
    return _bprod(N, [(m1(z=-2, q=1), 1), (m1(z=2, q=1), 1), (m1(-1, z=-1, q=1), -1), (m1(-1, z=1, q=1), -1)])


def _spt_ana(N):
    S = pair_sum_series(N)
    lhs = S * _lp({1: 1, 0: -1, -1: 1})  # z (1 - 1/z + 1/z^2)
    rhs = 1 - _dtilde(N) * _lp({0: 2, 1: -1, -1: -1})
    out = [(lhs, rhs)]
    for z in Z_SAMPLES:
        dt = _qprod(N, [(m1(1 / (z * z), q=1), 1), (m1(z * z, q=1), 1), (m1(-1 / z, q=1), -1), (m1(-z, q=1), -1)])
        c1 = (1 - z) * (1 - 1 / z) * (-1 / (z * (1 - 1 / z + 1 / (z * z))))
        c2 = (1 + 1 / z) / (z * (1 + 1 / z**3))
        out.append((pair_sum_at(z, N), dt * c1 + c2))
    return out


def _quintuple_deriv(N):
    lhs = derivative_at_one(dzq_series(N), 2)
    qq = _q_qsq(N)
    rhs = _qinf(N) * _qinf(N) * qq * qq * _lambert_mix(N) * -2
    return [(lhs, rhs)]


def _blospt(N):
    lhs = series_a(N) * 4
    eta = assert_integral(eta_quotient([(1, 4), (2, -2)], N))
    prod = _qprod(N, [(m1(q=1), 2), (m1(-1, q=1), -2)])
    return [(lhs, 1 - prod), (lhs, 1 - eta)]


def _bibasic_1(N):
    first = QSeries.one(N).shift_q(1).div_one_minus(-1, 2)

    def step(prev, n):
        return prev.mul_one_minus(-1, n - 1).mul_one_minus(-1, n - 1).shift_q(1).div_one_minus(-1, 2 * n)

    lhs = _sum_from_one(first, step, N) * 4 + 1
    r1 = _qprod(N, [(m1(-1, q=1), 2), (m1(-1, q=2, step=2), -1)]) * 2 - 1
    r2 = _qprod(N, [(m1(q=2, step=2), 3), (m1(q=1), -2), (m1(q=4, step=4), -1)]) * 2 - 1
    r3 = _qprod(N, [(m1(q=2, step=4), 1), (m1(q=1, step=2), -2)]) * 2 - 1
    return [(lhs, r1), (lhs, r2), (lhs, r3)]


def _bibasic_2(N):
    first = QSeries.one(N).mul_one_minus(-1, 1).shift_q(1).div_one_minus(-1, 3)

    def step(prev, n):
        t = prev.mul_one_minus(-1, n).mul_one_minus(1, 3 * (n - 1)).shift_q(1)
        return t.div_one_minus(1, n - 1).div_one_minus(-1, 3 * n)

    lhs = _sum_from_one(first, step, N) * 3 + 1
    prod = _qprod(N, [(m1(q=3, step=3), 1), (m1(-1, q=1), 1), (m1(-1, q=3, step=3), -1), (m1(q=1), -1)])
    return [(lhs, prod * F(3, 2) - F(1, 2))]


BLORANK_GRID = ((F(1), F(1)), (F(1, 2), F(3)), (F(-3), F(5, 7)))


def _blorank(N):
    T = _table(N)
    return [(blorank_series(d, e, N), T.generating_series(d, e, N)) for d, e in BLORANK_GRID]


def _corblo(N):
    return [(pair_sum_series(N), _table(N).corblo_series(N))]


def _window(n: int) -> range:
    return range(-3 * n - 5, 3 * n + 16)


MULTISUM_CAP = 7


def _blocoeff(N):
    P = mul_poch(pair_sum_series(N), m1(q=1), None, 1)
    pred = {}
    for n in range(N + 1):
        for m in set(_window(n)) | set(P[n].terms()):
            v = piecewise_coeff(m, n)
            if v:
                pred[(m, n)] = v
    out = [(P, BivarSeries.from_terms(pred, N))]
    K = min(N, MULTISUM_CAP)
    T = _table(K)
    ms = {(m, n): blocoeff_multisum(m, n, T) for n in range(K + 1) for m in _window(n)}
    pw = {(m, n): piecewise_coeff(m, n) for n in range(K + 1) for m in _window(n)}
    out.append((BivarSeries.from_terms(ms, K), BivarSeries.from_terms(pw, K)))
    return out


def _idenp(N):
    T = _table(N)
    lhs = [0] + [idenp_lhs(n, T) for n in range(1, N + 1)]
    rhs = [0] + [idenp_rhs(n) for n in range(1, N + 1)]
    return [(_seq(lhs), _seq(rhs))]


def _th3(N):
    lhs = series_a(N) * 5 - series_b(N) * 4
    prod = _qprod(N, [(m1(q=1), 2), (m1(-1, q=1), -2)])
    return [(lhs, prod * _lambert_mix(N))]


def _spt_mod(N):
    lhs = series_b(N) * 4
    e = assert_integral(eta_quotient([(1, 4), (2, -2)], N))
    t = assert_integral(frac_div(theta_shimura(N), eta_quotient([(1, 1)], N)))
    return [(lhs, F(5, 4) - e * F(31, 24) + t * F(1, 24))]


def _etatheta(N):
    strip = FracQSeries(F(1, 24), QSeries.one(N))
    lhs = assert_integral(frac_div(eta_quotient([(1, 5), (2, -2)], N), strip))
    rhs = assert_integral(frac_div(unary_theta(1, N), strip))
    return [(lhs, rhs)]


def _qpi(N):
    rhs = _bprod(
        N,
        [(m1(q=1), 1), (m1(z=1, q=1), 1), (m1(z=-1), 1), (m1(z=2, q=1, step=2), 1), (m1(z=-2, q=1, step=2), 1)],
    )
    return [(quintuple_lhs(N), rhs)]


def _qpi_half(N):
    rhs = _bprod(
        N,
        [
            (m1(q=2, step=2), 1),
            (m1(z=1, q=1, step=2), 1),
            (m1(z=-1, q=1, step=2), 1),
            (m1(z=2, step=4), 1),
            (m1(z=-2, q=4, step=4), 1),
        ],
    )
    return [(quintuple_lhs_full(N), rhs)]


def _gordon(N):
    return [(gordon_series(N), _qprod(N, [(m1(q=1), 3), (m1(q=1, step=2), 2)]))]


def _jtp(N):
    rhs = _qprod(N, [(m1(q=1), 1), (m1(-1, q=1), -1)])
    alt = QSeries.one(N) + (jtp_square_series(N) - 1)
    return [(jtp_square_series(N), rhs), (alt, rhs)]


def _psi(N):
    return [(psi_series(N), _qprod(N, [(m1(q=2, step=2), 2), (m1(q=1), -1)]))]


def _disspar(N, parity):
    inv = _qinf(2 * N + 1).invert()
    lhs = inv.dissect(2, parity).truncate(N)
    a, b = (3, 5) if parity == 0 else (1, 7)
    rhs = _qprod(N, [(m1(-1, q=a, step=8), 1), (m1(-1, q=b, step=8), 1), (m1(q=8, step=8), 1), (m1(q=1), -2)])
    return [(lhs, rhs)]


def _slater(N, parity):
    lhs = _seq(selfconj_count(2 * n + parity) for n in range(N + 1))
    terms = QSeries.zero(N)
    n = 0
    while 2 * n * n + 2 * n * parity <= N:
        t = QSeries.one(N).shift_q(2 * n * n + 2 * n * parity)
        terms = terms + mul_poch(t, m1(q=1), 2 * n + parity, -1)
        n += 1
    a, b = (3, 5) if parity == 0 else (1, 7)
    prod = _qprod(N, [(m1(-1, q=a, step=8), 1), (m1(-1, q=b, step=8), 1), (m1(q=8, step=8), 1), (m1(q=2, step=2), -1)])
    pp = _seq(partition_count(2 * n + parity) for n in range(N + 1))
    ratio = _qprod(N, [(m1(q=1), 1), (m1(-1, q=1), -1)])
    return [(lhs, terms), (lhs, prod), (lhs, ratio * pp)]


def _claim1(N):
    def rhs(n):
        total = partition_count(n)
        j = 1
        while 2 * j * j <= n:
            total += 2 * (-1) ** j * partition_count(n - 2 * j * j)
            j += 1
        return total

    return [(_seq(selfconj_count(n) for n in range(N + 1)), _seq(rhs(n) for n in range(N + 1)))]


def _parlemma(N):
    lhs = _qprod(N, [(m1(-1, q=1), 1), (m1(q=1), -2)])
    return [(lhs, _seq(a_of_n(n) for n in range(N + 1)))]


def _parlemma_odd(N):
    return [(_seq(a_odd(n) for n in range(N + 1)), QSeries.zero(N))]


def _sptpn(N):
    spt = _seq(spt_count(n) for n in range(N + 1))
    rhs = _seq(n * partition_count(n) - F(rank_moment2(n), 2) for n in range(N + 1))
    return [(spt, rhs), (spt, spt_series(N))]


def _np_series(N):
    return _seq(n * partition_count(n) for n in range(N + 1))


def _psc_signed(N):
    return _seq((-1) ** n * n * selfconj_count(n) for n in range(N + 1))


def _diffeuler(N):
    return [(_np_series(N), _qinf(N).invert() * lambert_all(N))]


def _diffpsc(N):
    return [(_psc_signed(N), _q_qsq(N) * lambert_odd(N) * -1)]


def _logdiffsp(N):
    lhs = _lambert_mix(N)
    r1 = _qinf(N) * _np_series(N) * 3 - _q_qsq(N).invert() * _psc_signed(N) * 2
    r2 = _qinf(N) * _np_series(N) * 3 - qpoch(m1(-1, q=1), N) * _psc_signed(N) * 2
    return [(lhs, r1), (lhs, r2)]


def diffk_sides(f: BivarSeries, k: int):
    """Both sides of the k-th derivative rule for (1-z)(1-1/z) f(z) at z = 1."""
    g = f * _lp({0: 2, 1: -1, -1: -1})
    lhs = derivative_at_one(g, k) * F(-((-1) ** k), factorial(k))
    rhs = QSeries.zero(f.order)
    for ell in range(2, k + 1):
        rhs = rhs + derivative_at_one(f, ell - 2) * F((-1) ** ell, factorial(ell - 2))
    return lhs, rhs


def _diffk(N):
    fixtures = (theta_product(N), dzq_series(N), pair_sum_series(N))
    return [diffk_sides(f, k) for f in fixtures for k in (2, 3, 4)]


def f_series(order: int) -> BivarSeries:
    """(1+z)(1+1/z) sum_{n>=1} (z^2q, z^-2q)_{n-1} q^n / (-zq, -q/z)_n"""
    N = order
    first = BivarSeries.one(N).shift_q(1).div_one_minus(-1, 1, 1).div_one_minus(-1, -1, 1)

    def step(prev, n):
        t = prev.mul_one_minus(1, 2, n - 1).mul_one_minus(1, -2, n - 1).shift_q(1)
        return t.div_one_minus(-1, 1, n).div_one_minus(-1, -1, n)

    return _sum_from_one(first, step, N, BivarSeries) * _lp({0: 2, 1: 1, -1: 1})


def _deri4th(N):
    S = pair_sum_series(N)
    f = f_series(N)
    fourth = derivative_at_one(S, 4) * F(-1, 24)
    via_f = derivative_at_one(f, 0) - derivative_at_one(f, 1) + derivative_at_one(f, 2) * F(1, 2)
    th3_lhs = series_a(N) * 5 - series_b(N) * 4
    return [
        (S, 1 + f * _lp({0: 2, 1: -1, -1: -1})),
        (derivative_at_one(f, 1), QSeries.zero(N)),
        (fourth, via_f),
        (fourth, th3_lhs),
    ]


CONG_P_RANGE = 50
CONG_SPT_MAX_ARG = 200


def _cong_p(mod, res):
    def build(_N):
        vals = [partition_count(mod * n + res) % mod for n in range(CONG_P_RANGE + 1)]
        return [(_seq(vals), QSeries.zero(CONG_P_RANGE))]

    return build


@lru_cache(maxsize=None)
def _spt_coeffs():
    return spt_series(CONG_SPT_MAX_ARG).coefficients


def _spt_top(mod, res):
    return (CONG_SPT_MAX_ARG - res) // mod


def _cong_spt(mod, res):
    def build(_N):
        c = _spt_coeffs()
        top = _spt_top(mod, res)
        vals = [int(c[mod * n + res]) % mod for n in range(top + 1)]
        return [(_seq(vals), QSeries.zero(top))]

    return build


# ---------------------------------------------------------------------------
# registry

_U, _B, _E = 40, 20, 8  # default orders: univariate, bivariate, enumeration

_CHECKS = [
    IdentityCheck("pentagonal", "(q;q)_inf equals the pentagonal number series", "Euler pentagonal number theorem", _U, _pentagonal),
    IdentityCheck("gf-spt-new", "spt generating function equals the Lambert plus pentagonal form", "spt generating function rewritten", _U, _gf_spt_new),
    IdentityCheck("watson-spl", "Watson-Whipple specialisation with symbolic z", "Watson q-Whipple specialisation", _B, _watson),
    IdentityCheck("diff2", "second z-derivative of (zq,q/z)_inf at z=1", "differentiation identity", _U, _diff2),
    IdentityCheck("dzq-forms", "two product forms of D(z,q) agree", "quintuple product denominator", _B, _dzq_forms),
    IdentityCheck("main-id", "three-parameter sum at six rational triples", "three-parameter identity", _U, _main_id),
    IdentityCheck("chan-mao-1", "first two-parameter sum, cleared and at rational z", "Chan-Mao identity, first", _B, _chan_mao_1, multiplier="(1 - z/x)(1 - x z)"),
    IdentityCheck("chan-mao-2", "second two-parameter sum, cleared and at rational z", "Chan-Mao identity, second", _B, _chan_mao_2, multiplier="(1 - z)(1 - z/x)"),
    IdentityCheck("spt-ana", "overpartition-pair sum in closed form, cleared and at rational z", "closed form of the pair sum", _B, _spt_ana, multiplier="z (1 - 1/z + 1/z^2)"),
    IdentityCheck("quintuple-deriv", "second z-derivative of D(z,q) at z=1", "quintuple product derivative", _U, _quintuple_deriv),
    IdentityCheck("blospt", "4 sum (q)_{n-1}^2 q^n/(-q)_n^2 = 1 - eta^4/eta(2)^2", "pair sum at z=1", _U, _blospt),
    IdentityCheck("bibasic-1", "bibasic sum in base q and q^2, three product forms", "bibasic evaluation, bases q and q^2", _U, _bibasic_1),
    IdentityCheck("bibasic-2", "bibasic sum in base q and q^3", "bibasic evaluation, bases q and q^3", _U, _bibasic_2),
    IdentityCheck("blorank", "rank generating function vs enumeration at rational d, e", "overpartition pair rank generating function", _E, _blorank, cap=_E),
    IdentityCheck("corblo", "pair sum coefficients vs signed N-table rows", "pair sum as signed rank counts", _E, _corblo, cap=_E),
    IdentityCheck("blocoeff", "(q)_inf times the pair sum: series, Chebyshev formula, multisum", "Chebyshev coefficient formula", 26, _blocoeff),
    IdentityCheck("idenp", "fourth rank moment multisum equals a p(n) sum, 1 <= n <= 15", "multisum in terms of p(n)", 10, _idenp, cap=15),
    IdentityCheck("th3", "double series equals an eta product times Lambert series", "double series reduction", _U, _th3),
    IdentityCheck("spt-mod", "double series as eta quotient plus weight 7/2 theta series", "weight 7/2 theta relation", _U, _spt_mod),
    IdentityCheck("etatheta", "eta(t)^5/eta(2t)^2 equals the weight 3/2 unary theta series", "eta quotient as unary theta", _U, _etatheta),
    IdentityCheck("qpi", "quintuple product identity, base q", "quintuple product identity", _B, _qpi),
    IdentityCheck("qpi-half", "quintuple product identity, base q^2 grid", "quintuple product identity", _B, _qpi_half),
    IdentityCheck("gordon", "sum (6n+1) q^{n(3n+1)/2} = (q)^3 (q;q^2)^2", "Ramanujan-Gordon identity", _U, _gordon),
    IdentityCheck("jtp", "sum (-1)^j q^{j^2} = (q)_inf/(-q)_inf", "Jacobi triple product", _U, _jtp),
    IdentityCheck("psi", "Gauss triangular series", "Gauss psi identity", _U, _psi),
    IdentityCheck("disspar-even", "p(2n) generating function", "2-dissection of 1/(q)_inf", _U, lambda N: _disspar(N, 0)),
    IdentityCheck("disspar-odd", "p(2n+1) generating function", "2-dissection of 1/(q)_inf", _U, lambda N: _disspar(N, 1)),
    IdentityCheck("slater-38", "self-conjugate partitions of even size", "Slater list, even dissection", _U, lambda N: _slater(N, 0)),
    IdentityCheck("slater-39", "self-conjugate partitions of odd size", "Slater list, odd dissection", _U, lambda N: _slater(N, 1)),
    IdentityCheck("claim1", "p_sc(n) = p(n) + 2 sum (-1)^j p(n - 2j^2)", "self-conjugate count via p(n)", _U, _claim1),
    IdentityCheck("parlemma", "(-q)_inf/(q)_inf^2 = sum a(n) q^n", "a(n) generating function", _U, _parlemma),
    IdentityCheck("parlemma-odd", "the odd-index companion of a(n) vanishes", "a(n) generating function", _U, _parlemma_odd),
    IdentityCheck("sptpn", "spt(n) = n p(n) - N_2(n)/2 by enumeration", "spt and the second rank moment", 10, _sptpn, cap=25),
    IdentityCheck("diffeuler", "sum n p(n) q^n = lambert/(q)_inf", "derivative of Euler's product", _U, _diffeuler),
    IdentityCheck("diffpsc", "signed n p_sc(n) series", "derivative of (-q;q^2)_inf", _U, _diffpsc),
    IdentityCheck("logdiffsp", "3L + 2L_odd in terms of n p(n) and n p_sc(n)", "logarithmic derivative combination", _U, _logdiffsp),
    IdentityCheck("diffk-lemma", "k-th derivative rule for (1-z)(1-1/z) f, k = 2,3,4", "derivative lemma", _B, _diffk),
    IdentityCheck("deri4th", "fourth z-derivative of the pair sum at z=1", "fourth derivative route", _B, _deri4th),
    IdentityCheck("cong-p-5", "p(5n+4) = 0 mod 5, n <= 50", "Ramanujan congruence", CONG_P_RANGE, _cong_p(5, 4), fixed=CONG_P_RANGE),
    IdentityCheck("cong-p-7", "p(7n+5) = 0 mod 7, n <= 50", "Ramanujan congruence", CONG_P_RANGE, _cong_p(7, 5), fixed=CONG_P_RANGE),
    IdentityCheck("cong-p-11", "p(11n+6) = 0 mod 11, n <= 50", "Ramanujan congruence", CONG_P_RANGE, _cong_p(11, 6), fixed=CONG_P_RANGE),
    IdentityCheck("cong-spt-5", "spt(5n+4) = 0 mod 5, argument <= 200", "Andrews spt congruence", _spt_top(5, 4), _cong_spt(5, 4), fixed=_spt_top(5, 4)),
    IdentityCheck("cong-spt-7", "spt(7n+5) = 0 mod 7, argument <= 200", "Andrews spt congruence", _spt_top(7, 5), _cong_spt(7, 5), fixed=_spt_top(7, 5)),
    IdentityCheck("cong-spt-13", "spt(13n+6) = 0 mod 13, argument <= 200", "Andrews spt congruence", _spt_top(13, 6), _cong_spt(13, 6), fixed=_spt_top(13, 6)),
]

REGISTRY: dict[str, IdentityCheck] = {c.id: c for c in _CHECKS}
assert len(REGISTRY) == len(_CHECKS), "duplicate check id"


def check_ids() -> list[str]:
    return list(REGISTRY)


def get_check(check_id: str) -> IdentityCheck:
    try:
        return REGISTRY[check_id]
    except KeyError:
        raise UnknownCheckId(check_id) from None


def run_check(check_id: str, order: int | None = None, perturb: Perturbation | None = None) -> IdentityReport:
    check = get_check(check_id)
    order = check.default_order if order is None else order
    if order < 1:
        raise ValueError("order must be >= 1")
    N = check.effective_order(order)
    t0 = time.perf_counter()
    pairs = check.build(N)
    mm = compare_all(pairs, None, perturb)
    ms = int((time.perf_counter() - t0) * 1000)
    return IdentityReport(check.id, mm is None, N, mm, ms)


def run_all(order: int | None = None, ids=None) -> list[IdentityReport]:
    ids = check_ids() if ids is None else list(ids)
    for i in ids:
        get_check(i)
    return [run_check(i, order) for i in ids]
