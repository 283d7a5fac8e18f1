"""Truncated formal series over exact rationals.

Containers:

* ``LaurentPoly``  -- sparse ``{z-exponent: coefficient}`` map in one symbol z
* ``QSeries``      -- dense ``c_0 + c_1 q + ... + c_N q^N``
* ``BivarSeries``  -- dense q-series whose coefficients are ``LaurentPoly``
* ``FracQSeries``  -- ``q^offset * QSeries`` with the offset on the 1/24 grid

Coefficients are ``int`` or ``fractions.Fraction``.  Integral values are kept
as ``int`` where that is free, so the all-integer case (most identities) never
pays for gcd normalisation.  Truncation order is inclusive and arithmetic
between operands of different order truncates to the smaller one.

All values are immutable once built; the internal dicts are never mutated
after a constructor returns.
"""

from __future__ import annotations

import numbers
from collections.abc import Iterable, Mapping
from fractions import Fraction
from typing import Union

from .errors import (
    NonIntegralOffset,
    NonUnitConstantTerm,
    OrderExceeded,
    ZeroSubstitutionWithNegativeExponent,
)

Rational = Union[int, Fraction]

__all__ = [
    "Rational",
    "as_rational",
    "LaurentPoly",
    "QSeries",
    "BivarSeries",
    "FracQSeries",
    "add",
    "mul",
    "invert",
    "diff_z",
    "eval_z",
    "coeff",
    "frac_mul",
    "frac_div",
    "assert_integral",
    "series_to_json",
    "series_from_json",
]


def as_rational(x) -> Rational:
    """Coerce ``x`` to an exact rational; floats are refused."""
    if isinstance(x, int):
        return int(x)
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        return as_rational(Fraction(x))
    if isinstance(x, numbers.Rational):
        return as_rational(Fraction(x.numerator, x.denominator))
    raise TypeError(f"exact rational required, got {type(x).__name__}: {x!r}")


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _reciprocal(c):
    if c == 1 or c == -1:
        return int(c)
    return _norm(Fraction(1) / c)


def _fmt_rational(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# ---------------------------------------------------------------------------
# raw {exponent: coefficient} helpers; inputs are never mutated


def _dadd(a: dict, b: dict) -> dict:
    if not b:
        return a
    if not a:
        return _dclean(b)
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _dsub(a: dict, b: dict) -> dict:
    if not b:
        return a
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) - c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _dmono(a: dict, c, shift: int) -> dict:
    """a * c * z^shift"""
    if not c:
        return {}
    if shift == 0:
        if c == 1:
            return a
        return {e: v * c for e, v in a.items()}
    return {e + shift: v * c for e, v in a.items()}


def _dmul_into(out: dict, a: dict, b: dict) -> None:
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            out[e] = get(e, 0) + ca * cb


def _dclean(d: dict) -> dict:
    return {e: c for e, c in d.items() if c}


def _dmul(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(b) == 1:
        (e, c), = b.items()
        return _dmono(a, c, e)
    if len(a) == 1:
        (e, c), = a.items()
        return _dmono(b, c, e)
    out: dict = {}
    _dmul_into(out, a, b)
    return _dclean(out)


# ---------------------------------------------------------------------------


class LaurentPoly:
    """Finite Laurent polynomial in z with exact rational coefficients."""

    __slots__ = ("_t",)

    def __init__(self, terms=None):
        t: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in items:
                e = int(e)
                v = t.get(e, 0) + as_rational(c)
                if v:
                    t[e] = _norm(v)
                else:
                    t.pop(e, None)
        self._t = t

    @classmethod
    def _raw(cls, t: dict) -> LaurentPoly:
        obj = object.__new__(cls)
        obj._t = t
        return obj

    @classmethod
    def monomial(cls, c, e: int = 0) -> LaurentPoly:
        c = as_rational(c)
        return cls._raw({int(e): c} if c else {})

    @classmethod
    def coerce(cls, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, Mapping):
            return cls(x)
        return cls.monomial(x, 0)

    def terms(self) -> dict:
        return dict(self._t)

    def items(self):
        return sorted(self._t.items())

    def __getitem__(self, e: int):
        return self._t.get(e, 0)

    def __bool__(self) -> bool:
        return bool(self._t)

    def __len__(self) -> int:
        return len(self._t)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self._t == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._t.items()))

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._t.items()})

    def __add__(self, other) -> LaurentPoly:
        other = LaurentPoly.coerce(other)
        return LaurentPoly._raw(_dadd(self._t, other._t))

    __radd__ = __add__

    def __sub__(self, other) -> LaurentPoly:
        other = LaurentPoly.coerce(other)
        return LaurentPoly._raw(_dsub(self._t, other._t))

    def __rsub__(self, other) -> LaurentPoly:
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return LaurentPoly._raw(_dmul(self._t, other._t))
        if isinstance(other, (int, Fraction)):
            return LaurentPoly._raw(_dmono(self._t, other, 0))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if not self.is_monomial():
                raise NonUnitConstantTerm("only monomials have Laurent inverses")
            (e, c), = self._t.items()
            return LaurentPoly._raw({e * k: _norm(Fraction(c) ** k)})
        out = LaurentPoly.monomial(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, e: int) -> LaurentPoly:
        return LaurentPoly._raw(_dmono(self._t, 1, e))

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    @property
    def min_exp(self):
        return min(self._t) if self._t else None

    @property
    def max_exp(self):
        return max(self._t) if self._t else None

    def diff(self) -> LaurentPoly:
        return LaurentPoly._raw({e - 1: c * e for e, c in self._t.items() if e})

    def evaluate(self, v) -> Rational:
        v = as_rational(v)
        if v == 1:
            return _norm(sum(self._t.values(), 0))
        if v == 0:
            if any(e < 0 for e in self._t):
                raise ZeroSubstitutionWithNegativeExponent("z = 0 in a negative power of z")
            return self._t.get(0, 0)
        fv = Fraction(v)
        return _norm(sum((c * fv**e for e, c in self._t.items()), Fraction(0)))

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for e, c in sorted(self._t.items()):
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = _fmt_rational(mag)
            else:
                zp = "z" if e == 1 else f"z^{e}"
                body = zp if mag == 1 else f"{_fmt_rational(mag)}*{zp}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        s = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


# ---------------------------------------------------------------------------


class QSeries:
    """Truncated power series sum_{n=0}^{N} c_n q^n over exact rationals."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable = (), order: int | None = None):
        c = [as_rational(x) for x in coefficients]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            c = c[: order + 1] + [0] * (order + 1 - len(c))
        if not c:
            raise ValueError("a series needs at least the q^0 coefficient")
        self._c = tuple(c)

    @classmethod
    def _raw(cls, c) -> QSeries:
        obj = object.__new__(cls)
        obj._c = tuple(c)
        return obj

    @classmethod
    def zero(cls, order: int) -> QSeries:
        return cls._raw([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> QSeries:
        return cls.constant(1, order)

    @classmethod
    def constant(cls, c, order: int) -> QSeries:
        return cls._raw([as_rational(c)] + [0] * order)

    @classmethod
    def from_terms(cls, terms: Mapping[int, object], order: int) -> QSeries:
        c = [0] * (order + 1)
        for n, v in terms.items():
            if 0 <= n <= order:
                c[n] += as_rational(v)
        return cls._raw(c)

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coefficients(self) -> tuple:
        return self._c

    def __getitem__(self, n):
        return self._c[n]

    def coeff(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise OrderExceeded(f"q^{n} beyond order {self.order}")
        return Fraction(self._c[n])

    def truncate(self, order: int) -> QSeries:
        if order > self.order:
            raise OrderExceeded(f"cannot extend order {self.order} to {order}")
        return QSeries._raw(self._c[: order + 1])

    def valuation(self):
        for n, c in enumerate(self._c):
            if c:
                return n
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, QSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def _coerce(self, other):
        if isinstance(other, QSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return QSeries.constant(other, self.order)
        return None

    def __add__(self, other):
        other_s = self._coerce(other)
        if other_s is None:
            return NotImplemented
        n = min(self.order, other_s.order) + 1
        return QSeries._raw([a + b for a, b in zip(self._c[:n], other_s._c[:n])])

    __radd__ = __add__

    def __neg__(self) -> QSeries:
        return QSeries._raw([-a for a in self._c])

    def __sub__(self, other):
        other_s = self._coerce(other)
        if other_s is None:
            return NotImplemented
        return self + (-other_s)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QSeries._raw([a * other for a in self._c])
        if not isinstance(other, QSeries):
            return NotImplemented
        N = min(self.order, other.order)
        a, b = self._c, other._c
        nb = [(j, b[j]) for j in range(N + 1) if b[j]]
        out = [0] * (N + 1)
        for i in range(N + 1):
            ai = a[i]
            if not ai:
                continue
            for j, bj in nb:
                if i + j > N:
                    break
                out[i + j] += ai * bj
        return QSeries._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            r = _reciprocal(as_rational(other))
            return QSeries._raw([_norm(a * r) for a in self._c])
        if isinstance(other, QSeries):
            return self * other.invert()
        return NotImplemented

    def __pow__(self, k: int) -> QSeries:
        if k < 0:
            return self.invert() ** (-k)
        out = QSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def invert(self) -> QSeries:
        a = self._c
        if not a[0]:
            raise NonUnitConstantTerm("q^0 coefficient is zero")
        r0 = _reciprocal(a[0])
        N = self.order
        nz = [(i, a[i]) for i in range(1, N + 1) if a[i]]
        b = [0] * (N + 1)
        b[0] = r0
        for n in range(1, N + 1):
            s = 0
            for i, ai in nz:
                if i > n:
                    break
                s += ai * b[n - i]
            b[n] = _norm(-s * r0) if s else 0
        return QSeries._raw(b)

    def mul_one_minus(self, c, k: int) -> QSeries:
        """Multiply by (1 - c q^k)."""
        c = as_rational(c)
        a = self._c
        if k == 0:
            return self * (1 - c)
        out = list(a)
        for n in range(k, len(a)):
            if a[n - k]:
                out[n] -= c * a[n - k]
        return QSeries._raw(out)

    def div_one_minus(self, c, k: int) -> QSeries:
        """Divide by (1 - c q^k)."""
        c = as_rational(c)
        if k == 0:
            if c == 1:
                raise NonUnitConstantTerm("division by 1 - 1 = 0")
            return self / (1 - c)
        out = list(self._c)
        for n in range(k, len(out)):
            if out[n - k]:
                out[n] += c * out[n - k]
        return QSeries._raw(out)

    def shift_q(self, k: int) -> QSeries:
        """Multiply by q^k (k >= 0), keeping the order."""
        if k == 0:
            return self
        N = self.order
        return QSeries._raw(([0] * k + list(self._c))[: N + 1])

    def q_derivative(self) -> QSeries:
        """q d/dq."""
        return QSeries._raw([n * c for n, c in enumerate(self._c)])

    def dilate(self, k: int) -> QSeries:
        """Substitute q -> q^k; the result is exact to order k*N."""
        N = self.order
        out = [0] * (k * N + 1)
        for n, c in enumerate(self._c):
            out[k * n] = c
        return QSeries._raw(out)

    def dissect(self, m: int, j: int) -> QSeries:
        """sum_n c_{mn+j} q^n, exact to order floor((N - j)/m)."""
        N = self.order
        if j > N:
            raise OrderExceeded("dissection residue beyond order")
        return QSeries._raw(self._c[j::m])

    def to_bivar(self) -> BivarSeries:
        return BivarSeries._raw([{0: c} if c else {} for c in self._c])

    def to_json(self) -> list:
        return series_to_json(self)

    def __repr__(self) -> str:
        return f"QSeries(order={self.order}, {list(map(_fmt_rational, self._c))})"


# ---------------------------------------------------------------------------


class BivarSeries:
    """Truncated q-series with Laurent-polynomial (in z) coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable = (), order: int | None = None):
        c = [LaurentPoly.coerce(x)._t for x in coefficients]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            c = c[: order + 1] + [{} for _ in range(order + 1 - len(c))]
        if not c:
            raise ValueError("a series needs at least the q^0 coefficient")
        self._c = tuple(c)

    @classmethod
    def _raw(cls, c) -> BivarSeries:
        obj = object.__new__(cls)
        obj._c = tuple(c)
        return obj

    @classmethod
    def zero(cls, order: int) -> BivarSeries:
        return cls._raw([{}] * (order + 1))

    @classmethod
    def one(cls, order: int) -> BivarSeries:
        return cls.monomial(1, 0, 0, order)

    @classmethod
    def monomial(cls, c, m: int, n: int, order: int) -> BivarSeries:
        """c z^m q^n truncated to ``order``."""
        c = as_rational(c)
        out: list = [{}] * (order + 1)
        if c and 0 <= n <= order:
            out[n] = {m: c}
        return cls._raw(out)

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, int], object], order: int) -> BivarSeries:
        """Build from ``{(m, n): c}`` (coefficient of z^m q^n)."""
        c: list = [{} for _ in range(order + 1)]
        for (m, n), v in terms.items():
            v = as_rational(v)
            if v and 0 <= n <= order:
                c[n] = _dadd(c[n], {m: v})
        return cls._raw(c)

    @classmethod
    def coerce(cls, x, order: int) -> BivarSeries:
        if isinstance(x, BivarSeries):
            return x
        if isinstance(x, QSeries):
            return x.to_bivar()
        if isinstance(x, LaurentPoly):
            return cls._raw([x._t] + [{}] * order)
        return cls.monomial(x, 0, 0, order)

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coefficients(self) -> tuple:
        return tuple(LaurentPoly._raw(d) for d in self._c)

    def __getitem__(self, n: int) -> LaurentPoly:
        return LaurentPoly._raw(self._c[n])

    def coeff(self, m: int, n: int) -> Fraction:
        if n > self.order:
            raise OrderExceeded(f"q^{n} beyond order {self.order}")
        if n < 0:
            return Fraction(0)
        return Fraction(self._c[n].get(m, 0))

    def truncate(self, order: int) -> BivarSeries:
        if order > self.order:
            raise OrderExceeded(f"cannot extend order {self.order} to {order}")
        return BivarSeries._raw(self._c[: order + 1])

    def valuation(self):
        for n, d in enumerate(self._c):
            if d:
                return n
        return None

    def is_z_free(self) -> bool:
        return all(not d or (len(d) == 1 and 0 in d) for d in self._c)

    def to_qseries(self) -> QSeries:
        if not self.is_z_free():
            raise ValueError("series depends on z; use eval_z")
        return QSeries._raw([d.get(0, 0) for d in self._c])

    def z_range(self):
        exps = [e for d in self._c for e in d]
        return (min(exps), max(exps)) if exps else None

    def __eq__(self, other) -> bool:
        if isinstance(other, BivarSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(frozenset(d.items()) for d in self._c))

    def _other(self, other):
        if isinstance(other, (BivarSeries, QSeries, LaurentPoly, int, Fraction)):
            return BivarSeries.coerce(other, self.order)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return BivarSeries._raw([_dadd(a, b) for a, b in zip(self._c, o._c)])

    __radd__ = __add__

    def __neg__(self) -> BivarSeries:
        return BivarSeries._raw([{e: -c for e, c in d.items()} for d in self._c])

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return BivarSeries._raw([_dsub(a, b) for a, b in zip(self._c, o._c)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BivarSeries._raw([_dmono(d, other, 0) for d in self._c])
        if isinstance(other, LaurentPoly):
            return BivarSeries._raw([_dmul(d, other._t) for d in self._c])
        o = self._other(other)
        if o is None:
            return NotImplemented
        N = min(self.order, o.order)
        a, b = self._c, o._c
        nb = [(j, b[j]) for j in range(N + 1) if b[j]]
        out: list = [{} for _ in range(N + 1)]
        for i in range(N + 1):
            ai = a[i]
            if not ai:
                continue
            for j, bj in nb:
                if i + j > N:
                    break
                _dmul_into(out[i + j], ai, bj)
        return BivarSeries._raw([_dclean(d) for d in out])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            r = _reciprocal(as_rational(other))
            return BivarSeries._raw([{e: _norm(c * r) for e, c in d.items()} for d in self._c])
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.invert()

    def __pow__(self, k: int) -> BivarSeries:
        if k < 0:
            return self.invert() ** (-k)
        out = BivarSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def invert(self) -> BivarSeries:
        a = self._c
        if len(a[0]) != 1:
            raise NonUnitConstantTerm(
                f"q^0 coefficient {LaurentPoly._raw(a[0])} is not a nonzero monomial"
            )
        (e0, c0), = a[0].items()
        r0 = _reciprocal(c0)
        N = self.order
        nz = [(i, a[i]) for i in range(1, N + 1) if a[i]]
        b: list = [{}] * (N + 1)
        b[0] = {-e0: r0}
        for n in range(1, N + 1):
            acc: dict = {}
            for i, ai in nz:
                if i > n:
                    break
                if b[n - i]:
                    _dmul_into(acc, ai, b[n - i])
            b[n] = {e - e0: _norm(-c * r0) for e, c in acc.items() if c}
        return BivarSeries._raw(b)

    def mul_one_minus(self, c, z_exp: int, q_exp: int) -> BivarSeries:
        """Multiply by (1 - c z^z_exp q^q_exp)."""
        c = as_rational(c)
        if not c:
            return self
        a = self._c
        out = list(a)
        k = q_exp
        for n in range(k, len(a)):
            if a[n - k]:
                out[n] = _dsub(out[n], _dmono(a[n - k], c, z_exp))
        return BivarSeries._raw(out)

    def div_one_minus(self, c, z_exp: int, q_exp: int) -> BivarSeries:
        """Divide by (1 - c z^z_exp q^q_exp)."""
        c = as_rational(c)
        if not c:
            return self
        if q_exp == 0:
            if z_exp != 0:
                raise NonUnitConstantTerm("cannot divide by 1 - c z^e with e != 0")
            if c == 1:
                raise NonUnitConstantTerm("division by 1 - 1 = 0")
            return self / (1 - c)
        out = list(self._c)
        k = q_exp
        for n in range(k, len(out)):
            if out[n - k]:
                out[n] = _dadd(out[n], _dmono(out[n - k], c, z_exp))
        return BivarSeries._raw(out)

    def shift_q(self, k: int) -> BivarSeries:
        """Multiply by q^k (k >= 0), keeping the order."""
        if k == 0:
            return self
        N = self.order
        return BivarSeries._raw(([{}] * k + list(self._c))[: N + 1])

    def shift_z(self, e: int) -> BivarSeries:
        """Multiply by z^e."""
        return BivarSeries._raw([_dmono(d, 1, e) for d in self._c])

    def diff_z(self) -> BivarSeries:
        return BivarSeries._raw(
            [{e - 1: c * e for e, c in d.items() if e} for d in self._c]
        )

    def eval_z(self, v) -> QSeries:
        v = as_rational(v)
        if v == 0 and any(e < 0 for d in self._c for e in d):
            raise ZeroSubstitutionWithNegativeExponent("z = 0 in a negative power of z")
        return QSeries._raw([LaurentPoly._raw(d).evaluate(v) for d in self._c])

    def to_json(self) -> list:
        return series_to_json(self)

    def __repr__(self) -> str:
        shown = ", ".join(
            f"q^{n}: {LaurentPoly._raw(d)}" for n, d in enumerate(self._c) if d
        )
        return f"BivarSeries(order={self.order}, {{{shown}}})"


# ---------------------------------------------------------------------------


class FracQSeries:
    """q^offset * body, offset on the 1/24 grid (eta quotients, theta series)."""

    __slots__ = ("offset", "body")

    def __init__(self, offset, body: QSeries):
        offset = Fraction(as_rational(offset))
        if 24 % offset.denominator:
            raise NonIntegralOffset(f"offset {offset} is not on the 1/24 grid")
        self.offset = offset
        self.body = body

    @property
    def order(self) -> int:
        return self.body.order

    def __mul__(self, other: FracQSeries) -> FracQSeries:
        return frac_mul(self, other)

    def __truediv__(self, other: FracQSeries) -> FracQSeries:
        return frac_div(self, other)

    def __eq__(self, other) -> bool:
        if isinstance(other, FracQSeries):
            return self.offset == other.offset and self.body == other.body
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.offset, self.body))

    def __repr__(self) -> str:
        return f"FracQSeries(offset={self.offset}, body={self.body!r})"


def frac_mul(a: FracQSeries, b: FracQSeries) -> FracQSeries:
    return FracQSeries(a.offset + b.offset, a.body * b.body)


def frac_div(a: FracQSeries, b: FracQSeries) -> FracQSeries:
    return FracQSeries(a.offset - b.offset, a.body * b.body.invert())


def assert_integral(a: FracQSeries) -> QSeries:
    if a.offset != 0:
        raise NonIntegralOffset(f"offset q^{a.offset} does not cancel")
    return a.body


# ---------------------------------------------------------------------------
# functional surface


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def invert(a):
    return a.invert()


def diff_z(a: BivarSeries) -> BivarSeries:
    return a.diff_z()


def eval_z(a: BivarSeries, v) -> QSeries:
    return a.eval_z(v)


def coeff(a: BivarSeries, m: int, n: int) -> Fraction:
    return a.coeff(m, n)


def series_to_json(s) -> list:
    """Nonzero coefficients as ``[{"m", "n", "num", "den"}]``.

    ``m`` is ``None`` for a ``QSeries``; numerators and denominators are
    decimal strings so consumers are not limited by integer width.
    """
    rows = []
    if isinstance(s, QSeries):
        for n, c in enumerate(s.coefficients):
            if c:
                f = Fraction(c)
                rows.append({"m": None, "n": n, "num": str(f.numerator), "den": str(f.denominator)})
        return rows
    for n, d in enumerate(s._c):
        for m in sorted(d):
            f = Fraction(d[m])
            rows.append({"m": m, "n": n, "num": str(f.numerator), "den": str(f.denominator)})
    return rows


def series_from_json(rows: list, order: int):
    if all(r["m"] is None for r in rows):
        return QSeries.from_terms({r["n"]: Fraction(int(r["num"]), int(r["den"])) for r in rows}, order)
    return BivarSeries.from_terms(
        {(r["m"], r["n"]): Fraction(int(r["num"]), int(r["den"])) for r in rows}, order
    )
