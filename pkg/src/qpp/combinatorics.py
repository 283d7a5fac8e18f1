"""Brute-force combinatorial oracles.

Partitions, partitions into distinct odd parts, smallest parts, Dyson ranks,
overpartitions and overpartition pairs with the (r, s, rank) statistics
whose counts N(r, s, m, n) are tabulated in ``NTable``.

Rank convention for an overpartition pair (lambda, mu)::

    rank = l - #parts(lambda) - #overlined parts(mu) - chi

with ``l`` the largest part of the pair and ``chi = 1`` exactly when the
largest value occurs in mu non-overlined, does not occur in lambda, and is
not the overlined value of mu.  This is the reading under which the table
reproduces ``blorank_series`` coefficient for coefficient (see tests);
counting *all* parts of mu instead already fails at n = 2.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .errors import DivisionByZeroParameter, TableTooSmall
from .qtoolkit import Monomial, chain_terms, mul_poch, sum_bivariate_terms
from .series import BivarSeries, QSeries, as_rational

Partition = tuple  # weakly decreasing tuple of positive ints


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n as non-increasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), 0, -1):
        for rest in partitions(n - p, p):
            yield (p,) + rest


# ---------------------------------------------------------------------------
# partition numbers

_P = [1]


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal recurrence; p(n) = 0 for n < 0."""
    if n < 0:
        return 0
    while len(_P) <= n:
        m = len(_P)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * _P[m - g1]
            g2 = g1 + k
            if g2 <= m:
                total += sign * _P[m - g2]
            k += 1
        _P.append(total)
    return _P[n]


_PSC = [1]


def selfconj_count(n: int) -> int:
    """Partitions of n into distinct odd parts (= self-conjugate partitions)."""
    if n < 0:
        return 0
    if n >= len(_PSC):
        size = max(n + 1, 2 * len(_PSC))
        c = [0] * size
        c[0] = 1
        for part in range(1, size, 2):
            for m in range(size - 1, part - 1, -1):
                c[m] += c[m - part]
        _PSC[:] = c
    return _PSC[n]


def is_self_conjugate(p: Partition) -> bool:
    conj = tuple(sum(1 for x in p if x > i) for i in range(p[0])) if p else ()
    return conj == p


def spt_count(n: int) -> int:
    """Total number of smallest parts over all partitions of n (enumeration)."""
    return sum(p.count(p[-1]) for p in partitions(n)) if n > 0 else 0


def rank_moment2(n: int) -> int:
    """Atkin-Garvan N_2(n): sum over partitions of (largest - #parts)^2."""
    return sum((p[0] - len(p)) ** 2 for p in partitions(n)) if n > 0 else 0


def spt_series(order: int) -> QSeries:
    """sum spt(n) q^n, rewritten as (1/(q)_inf) sum q^n (q)_{n-1}/(1-q^n).

    Uses 1/(q^{n+1};q)_inf = (q;q)_n/(q;q)_inf, which keeps every term linear
    time and makes arguments in the hundreds cheap.
    """
    total = QSeries.zero(order)
    run = QSeries.one(order)  # (q)_{n-1}
    for n in range(1, order + 1):
        total = total + run.shift_q(n).div_one_minus(1, n)
        run = run.mul_one_minus(1, n)
    return total * mul_poch(QSeries.one(order), Monomial(1, 0, 1), None, -1)


def a_of_n(n: int) -> int:
    """a(n) = sum_{k=0}^{2n} (-1)^k p(k) p(2n-k)."""
    return sum((-1) ** k * partition_count(k) * partition_count(2 * n - k) for k in range(2 * n + 1))


def a_odd(n: int) -> int:
    """The odd companion sum_{k=0}^{2n+1} (-1)^k p(k) p(2n+1-k); always 0."""
    return sum(
        (-1) ** k * partition_count(k) * partition_count(2 * n + 1 - k) for k in range(2 * n + 2)
    )


# ---------------------------------------------------------------------------
# overpartitions


@dataclass(frozen=True)
class Overpartition:
    parts: Partition
    overlined: frozenset = frozenset()

    def __post_init__(self):
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError("parts must be non-increasing")
        if not set(self.overlined) <= set(self.parts):
            raise ValueError("overlined values must occur among the parts")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def __str__(self) -> str:
        shown, seen = [], set()
        for p in self.parts:
            if p in self.overlined and p not in seen:
                shown.append(f"{p}'")
            else:
                shown.append(str(p))
            seen.add(p)
        return "(" + ",".join(shown) + ")"


@dataclass(frozen=True)
class OverpartitionPair:
    lam: Overpartition
    mu: Overpartition

    @property
    def size(self) -> int:
        return self.lam.size + self.mu.size


@dataclass(frozen=True)
class PairStats:
    r: int
    s: int
    rank: int


def enumerate_overpartitions(n: int) -> list[Overpartition]:
    out = []
    for p in partitions(n):
        values = sorted(set(p), reverse=True)
        for mask in itertools.product((False, True), repeat=len(values)):
            out.append(Overpartition(p, frozenset(v for v, b in zip(values, mask) if b)))
    return out


def enumerate_pairs(n: int) -> Iterator[OverpartitionPair]:
    """Every overpartition pair of n, each exactly once."""
    for k in range(n + 1):
        lams = enumerate_overpartitions(k)
        mus = enumerate_overpartitions(n - k)
        for lam in lams:
            for mu in mus:
                yield OverpartitionPair(lam, mu)


def _mu_top_plain(mu: Overpartition) -> bool:
    return bool(mu.parts) and mu.largest not in mu.overlined


def pair_stats(pair: OverpartitionPair) -> PairStats:
    lam, mu = pair.lam, pair.mu
    n_over_mu = len(mu.overlined)
    r = len(lam.overlined) + len(mu.parts) - n_over_mu
    s = len(mu.parts)
    if not lam.parts and not mu.parts:
        return PairStats(r, s, 0)
    top = max(lam.largest, mu.largest)
    chi = int(mu.largest == top and lam.largest < top and _mu_top_plain(mu))
    return PairStats(r, s, top - len(lam.parts) - n_over_mu - chi)


# ---------------------------------------------------------------------------
# N(r, s, m, n)


@dataclass(frozen=True)
class NTable:
    """Counts N(r, s, m, n) for all n <= max_n, as a sparse map."""

    max_n: int
    counts: dict
    _rows: dict = field(default_factory=dict, repr=False, compare=False)

    def __getitem__(self, key: tuple) -> int:
        return self.counts.get(key, 0)

    def total(self, n: int) -> int:
        return sum(c for (_, _, _, nn), c in self.counts.items() if nn == n)

    def require(self, n: int) -> None:
        if n > self.max_n:
            raise TableTooSmall(f"table built to n = {self.max_n}, need {n}")

    def corblo_row(self, n: int) -> dict:
        """{m: sum_{r,s} N(r, s, m-2s+2r, n) (-1)^{r+s+m}}, zeros dropped."""
        self.require(n)
        row = self._rows.get(n)
        if row is None:
            acc: Counter = Counter()
            for (r, s, mm, nn), c in self.counts.items():
                if nn == n:
                    m = mm + 2 * s - 2 * r
                    acc[m] += c if (r + s + m) % 2 == 0 else -c
            row = {m: v for m, v in acc.items() if v}
            self._rows[n] = row
        return row

    def generating_series(self, d, e, order: int | None = None) -> BivarSeries:
        """sum N(r,s,m,n) d^r e^s z^m q^n."""
        order = self.max_n if order is None else order
        self.require(order)
        d, e = Fraction(as_rational(d)), Fraction(as_rational(e))
        terms: Counter = Counter()
        for (r, s, m, n), c in self.counts.items():
            if n <= order:
                terms[(m, n)] += c * d**r * e**s
        return BivarSeries.from_terms(terms, order)

    def corblo_series(self, order: int | None = None) -> BivarSeries:
        order = self.max_n if order is None else order
        terms = {(m, n): v for n in range(order + 1) for m, v in self.corblo_row(n).items()}
        return BivarSeries.from_terms(terms, order)

    def rows(self):
        for (r, s, m, n) in sorted(self.counts, key=lambda k: (k[3], k[0], k[1], k[2])):
            yield r, s, m, n, self.counts[(r, s, m, n)]


def _summaries(n: int) -> tuple[Counter, Counter]:
    """Multiset of the per-overpartition data pair_stats depends on."""
    as_lam: Counter = Counter()
    as_mu: Counter = Counter()
    for op in enumerate_overpartitions(n):
        k_over = len(op.overlined)
        as_lam[(len(op.parts), k_over, op.largest)] += 1
        as_mu[(len(op.parts), k_over, op.largest, _mu_top_plain(op))] += 1
    return as_lam, as_mu


def build_ntable(max_n: int) -> NTable:
    """Tabulate N(r,s,m,n) for n <= max_n.

    Equivalent to aggregating ``pair_stats`` over ``enumerate_pairs`` (the
    tests check this), but pairs are combined through per-size multisets of
    the statistics that matter, which is far cheaper than materialising them.
    """
    summ = [_summaries(k) for k in range(max_n + 1)]
    counts: Counter = Counter()
    for n in range(max_n + 1):
        for k in range(n + 1):
            lams = summ[k][0]
            mus = summ[n - k][1]
            for (lp, lo, ll), cl in lams.items():
                for (mp, mo, ml, plain), cm in mus.items():
                    r = lo + mp - mo
                    if lp == 0 and mp == 0:
                        counts[(r, mp, 0, n)] += cl * cm
                        continue
                    top = max(ll, ml)
                    chi = int(ml == top and ll < top and plain)
                    counts[(r, mp, top - lp - mo - chi, n)] += cl * cm
    return NTable(max_n, dict(counts))


def build_ntable_naive(max_n: int) -> NTable:
    counts: Counter = Counter()
    for n in range(max_n + 1):
        for pair in enumerate_pairs(n):
            st = pair_stats(pair)
            counts[(st.r, st.s, st.rank, n)] += 1
    return NTable(max_n, dict(counts))


def blorank_series(d, e, order: int) -> BivarSeries:
    """sum_n (-1/d, -1/e; q)_n (deq)^n / (zq, q/z; q)_n, rational d, e."""
    d, e = as_rational(d), as_rational(e)
    if d == 0 or e == 0:
        raise DivisionByZeroParameter("d and e must be nonzero")
    md, me = -Fraction(1) / d, -Fraction(1) / e

    def step(prev: BivarSeries, n: int) -> BivarSeries:
        t = prev.mul_one_minus(md, 0, n - 1).mul_one_minus(me, 0, n - 1)
        t = (t * as_rational(Fraction(d) * e)).shift_q(1)
        return t.div_one_minus(1, 1, n).div_one_minus(1, -1, n)

    return sum_bivariate_terms(chain_terms(BivarSeries.one(order), step), order)


# ---------------------------------------------------------------------------
# pentagonal numbers and the N-multisums


@dataclass(frozen=True)
class PentagonalIndex:
    ell: int
    value: int


def pentagonal(ell: int) -> int:
    return (3 * ell * ell + ell) // 2


def pentagonal_numbers_upto(n: int) -> list[PentagonalIndex]:
    out = []
    ell = 0
    while pentagonal(-ell) <= n or pentagonal(ell) <= n:
        for x in ((0,) if ell == 0 else (-ell, ell)):
            if pentagonal(x) <= n:
                out.append(PentagonalIndex(x, pentagonal(x)))
        ell += 1
    return sorted(out, key=lambda p: p.value)


def is_pentagonal(n: int) -> int | None:
    """The unique ell with (3 ell^2 + ell)/2 = n, or None."""
    if n < 0:
        return None
    disc = 1 + 24 * n
    root = math.isqrt(disc)
    if root * root != disc:
        return None
    for num in (root - 1, -root - 1):
        if num % 6 == 0:
            return num // 6
    return None


def blocoeff_multisum(m: int, n: int, table: NTable) -> int:
    """sum over k with 0 <= w_k <= n and r, s of N(r,s,m-2s+2r,n-w_k)(-1)^{r+s+m+k}."""
    table.require(n)
    total = 0
    for pk in pentagonal_numbers_upto(n):
        v = table.corblo_row(n - pk.value).get(m, 0)
        total += -v if pk.ell % 2 else v
    return total


def _moment_weight(m: int, weight: str) -> int:
    # the row is symmetric in m, so only the even part m^4 + 11 m^2 of the
    # falling factorial survives; "printed" is the m^2 (m^2 - 11) variant,
    # kept so tests can show it does not balance the identity
    if weight == "m2":
        return m * m * (m * m + 11)
    if weight == "printed":
        return m * m * (m * m - 11)
    if weight == "falling":
        return m * (m - 1) * (m - 2) * (m - 3)
    raise ValueError(weight)


def nmoment(n: int, table: NTable, weight: str = "m2") -> int:
    """sum_{r,s,m} (-1)^{r+s+m} w(m) N(r,s,m-2s+2r,n)."""
    return sum(_moment_weight(m, weight) * v for m, v in table.corblo_row(n).items())


def idenp_lhs(n: int, table: NTable, weight: str = "m2") -> Fraction:
    """-(1/24) sum_{0<=j<=n} a(j) sum_{r,s,m} (-1)^{r+s+m} w(m) N(r,s,m-2s+2r,n-j).

    The j = 0 term carries the table row at n itself, so the table must
    reach n.  The j = n term vanishes since only the empty pair has size 0.
    """
    table.require(n)
    total = sum(a_of_n(j) * nmoment(n - j, table, weight) for j in range(n + 1))
    return Fraction(-total, 24)


def idenp_rhs(n: int) -> int:
    """sum_k (-1)^k (3(n-k^2) p(n-k^2) - 2n(-1)^n p(n-2k^2))."""
    p = partition_count
    total = 0
    k = 0
    while k * k <= n:
        for kk in ((0,) if k == 0 else (k, -k)):
            t = 3 * (n - kk * kk) * p(n - kk * kk) - 2 * n * (-1) ** n * p(n - 2 * kk * kk)
            total += -t if kk % 2 else t
        k += 1
    return total
