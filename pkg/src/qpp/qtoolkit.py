"""Builders for q-products, theta-type sums, Lambert series and eta quotients.

Every Pochhammer argument is a monomial ``c z^e q^k`` with base ``q^step``,
so a factor ``1 - c z^e q^(k + j*step)`` is applied to a series in linear
time by ``mul_one_minus`` / ``div_one_minus``; no general convolution is
needed to build a product.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

from .errors import DivergentFormalProduct, ValuationViolation
from .series import BivarSeries, FracQSeries, QSeries, Rational, as_rational

Series = Union[QSeries, BivarSeries]


@dataclass(frozen=True)
class Monomial:
    """The Pochhammer argument ``scalar * z^z_exp * q^q_exp`` over base ``q^q_step``."""

    scalar: Rational
    z_exp: int = 0
    q_exp: int = 0
    q_step: int = 1

    def __post_init__(self):
        object.__setattr__(self, "scalar", as_rational(self.scalar))
        if self.q_step < 1:
            raise ValueError("q_step must be >= 1")
        if self.q_exp < 0:
            raise ValueError("q_exp must be >= 0")

    def with_scalar_z(self, zval) -> Monomial:
        """Fold z := zval into the scalar (for rational specialisations)."""
        if zval is None:
            return self
        zval = Fraction(as_rational(zval))
        return Monomial(self.scalar * zval**self.z_exp, 0, self.q_exp, self.q_step)


def mono(c=1, *, z: int = 0, q: int = 0, step: int = 1) -> Monomial:
    return Monomial(c, z, q, step)


@dataclass(frozen=True)
class ProductSpec:
    """A finite list of ``(argument, multiplicity)`` infinite Pochhammer factors."""

    factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        for a, k in self.factors:
            if not isinstance(a, Monomial):
                raise TypeError("factor arguments must be Monomial")
            if k == 0:
                raise ValueError("multiplicities must be nonzero")


# ---------------------------------------------------------------------------


def _apply(s: Series, c, e: int, k: int, divide: bool) -> Series:
    if isinstance(s, QSeries):
        if e:
            raise ValueError("z-dependent factor applied to a univariate series")
        return s.div_one_minus(c, k) if divide else s.mul_one_minus(c, k)
    return s.div_one_minus(c, e, k) if divide else s.mul_one_minus(c, e, k)


def mul_poch(s: Series, a: Monomial, n: int | None = None, power: int = 1) -> Series:
    """Return ``s * (a; q^step)_n ** power``; ``n=None`` is the infinite product.

    Factors whose q-valuation exceeds the order of ``s`` are dropped: they are
    1 modulo q^(order+1).
    """
    if power == 0:
        return s
    if n is None and a.q_exp == 0:
        raise DivergentFormalProduct(f"({a};q)_inf has a q^0 argument")
    if not a.scalar:
        return s
    N = s.order
    divide = power < 0
    j = 0
    while n is None or j < n:
        k = a.q_exp + j * a.q_step
        if k > N:
            break
        for _ in range(abs(power)):
            s = _apply(s, a.scalar, a.z_exp, k, divide)
        j += 1
    return s


def poch_finite(a: Monomial, n: int, order: int) -> BivarSeries:
    return mul_poch(BivarSeries.one(order), a, n)


def poch_infinite(a: Monomial, order: int) -> BivarSeries:
    return mul_poch(BivarSeries.one(order), a, None)


def product(spec: ProductSpec, order: int) -> BivarSeries:
    s = BivarSeries.one(order)
    for a, k in spec.factors:
        s = mul_poch(s, a, None, k)
    return s


def qpoch(a: Monomial, order: int, n: int | None = None, power: int = 1) -> QSeries:
    """Univariate ``(a; q^step)_n ** power``."""
    return mul_poch(QSeries.one(order), a, n, power)


def qproduct(factors: Sequence[tuple[Monomial, int]], order: int) -> QSeries:
    s = QSeries.one(order)
    for a, k in factors:
        s = mul_poch(s, a, None, k)
    return s


def euler(order: int, step: int = 1) -> QSeries:
    """(q^step; q^step)_inf"""
    return qpoch(Monomial(1, 0, step, step), order)


# ---------------------------------------------------------------------------
# explicit sums


def pentagonal_series(order: int) -> QSeries:
    """sum_k (-1)^k q^{k(3k+1)/2}"""
    c = [0] * (order + 1)
    k = 0
    while k * (3 * k - 1) // 2 <= order:
        for kk in {k, -k}:
            e = kk * (3 * kk + 1) // 2
            if e <= order:
                c[e] += -1 if kk % 2 else 1
        k += 1
    return QSeries._raw(c)


def lambert_all(order: int) -> QSeries:
    """sum n q^n/(1-q^n) = sum sigma(n) q^n"""
    c = [0] * (order + 1)
    for d in range(1, order + 1):
        for m in range(d, order + 1, d):
            c[m] += d
    return QSeries._raw(c)


def lambert_odd(order: int) -> QSeries:
    """sum over odd n of n q^n/(1-q^n)"""
    c = [0] * (order + 1)
    for d in range(1, order + 1, 2):
        for m in range(d, order + 1, d):
            c[m] += d
    return QSeries._raw(c)


def lambert_even(order: int) -> QSeries:
    """sum n q^{2n}/(1-q^{2n})"""
    c = [0] * (order + 1)
    for d in range(1, order // 2 + 1):
        for m in range(2 * d, order + 1, 2 * d):
            c[m] += d
    return QSeries._raw(c)


def _bilateral(order: int, exponent: Callable[[int], int]):
    """Integers n with 0 <= exponent(n) <= order, for exponent quadratic in n."""
    n = 0
    out = []
    while True:
        hit = False
        for nn in ((0,) if n == 0 else (n, -n)):
            e = exponent(nn)
            if e <= order:
                out.append((nn, e))
                hit = True
        if not hit and n > 0:
            return out
        n += 1


def quintuple_lhs(order: int) -> BivarSeries:
    """sum_n q^{(3n^2+n)/2} (z^{3n} - z^{-3n-1})"""
    terms: dict = {}
    for n, e in _bilateral(order, lambda n: (3 * n * n + n) // 2):
        terms[(3 * n, e)] = terms.get((3 * n, e), 0) + 1
        terms[(-3 * n - 1, e)] = terms.get((-3 * n - 1, e), 0) - 1
    return BivarSeries.from_terms(terms, order)


def quintuple_lhs_full(order: int) -> BivarSeries:
    """sum_n (z^{3n} q^{3n^2-2n} - z^{-3n-1} q^{3n^2+4n+1}), the base-q^2 form."""
    terms: dict = {}
    for n, e in _bilateral(order, lambda n: 3 * n * n - 2 * n):
        terms[(3 * n, e)] = terms.get((3 * n, e), 0) + 1
    for n, e in _bilateral(order, lambda n: 3 * n * n + 4 * n + 1):
        terms[(-3 * n - 1, e)] = terms.get((-3 * n - 1, e), 0) - 1
    return BivarSeries.from_terms(terms, order)


def gordon_series(order: int) -> QSeries:
    """sum_n (6n+1) q^{(3n^2+n)/2}"""
    c = [0] * (order + 1)
    for n, e in _bilateral(order, lambda n: (3 * n * n + n) // 2):
        c[e] += 6 * n + 1
    return QSeries._raw(c)


def jtp_square_series(order: int) -> QSeries:
    """sum_j (-1)^j q^{j^2}"""
    c = [0] * (order + 1)
    for j, e in _bilateral(order, lambda j: j * j):
        c[e] += -1 if j % 2 else 1
    return QSeries._raw(c)


def psi_series(order: int) -> QSeries:
    """sum_n q^{2n^2-n}"""
    c = [0] * (order + 1)
    for _, e in _bilateral(order, lambda n: 2 * n * n - n):
        c[e] += 1
    return QSeries._raw(c)


# ---------------------------------------------------------------------------
# eta quotients and the weight 7/2 theta series


def eta_quotient(spec: Sequence[tuple[int, int]], order: int) -> FracQSeries:
    """prod eta(d tau)^e as q^{sum e d/24} prod (q^d; q^d)_inf^e."""
    body = QSeries.one(order)
    offset = Fraction(0)
    for d, e in spec:
        if d < 1:
            raise ValueError("eta level must be positive")
        offset += Fraction(e * d, 24)
        body = mul_poch(body, Monomial(1, 0, d, d), None, e)
    return FracQSeries(offset, body)


def chi12(n: int) -> int:
    """(n/12) as displayed: 1 for n = 1 (mod 6), -1 for n = 5 (mod 6), else 0."""
    r = n % 6
    return 1 if r == 1 else -1 if r == 5 else 0


def unary_theta(power: int, order: int) -> FracQSeries:
    """sum_{n>=1} chi12(n) n^power q^{n^2/24} on the (n^2-1)/24 grid."""
    c = [0] * (order + 1)
    n = 1
    while (n * n - 1) // 24 <= order:
        x = chi12(n)
        if x:
            c[(n * n - 1) // 24] += x * n**power
        n += 1
    return FracQSeries(Fraction(1, 24), QSeries._raw(c))


def theta_shimura(order: int) -> FracQSeries:
    """theta(tau) = sum chi12(n) n^3 q^{n^2/24}; ``order`` bounds the body."""
    return unary_theta(3, order)


# ---------------------------------------------------------------------------
# series drivers


def sum_bivariate_terms(term_builder: Callable[[int], Series], order: int) -> Series:
    """sum_{n=0}^{order} term_builder(n).

    Exact to ``order`` because term n must have q-valuation >= n; this is
    checked for every term.
    """
    total = None
    for n in range(order + 1):
        t = term_builder(n)
        if t.order < order:
            raise ValueError(f"term {n} built only to order {t.order}")
        v = t.valuation()
        if v is not None and v < n:
            raise ValuationViolation(f"term {n} has q-valuation {v} < {n}")
        total = t.truncate(order) if total is None else total + t
    return total


def chain_terms(first: Series, step: Callable[[Series, int], Series]) -> Callable[[int], Series]:
    """Memoised term builder with term(0) = first, term(n) = step(term(n-1), n)."""
    cache = [first]

    def term(n: int) -> Series:
        while len(cache) <= n:
            cache.append(step(cache[-1], len(cache)))
        return cache[n]

    return term
