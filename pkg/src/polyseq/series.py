"""Truncated formal power series over the rationals.

A :class:`TruncSeries` of order ``N`` knows the coefficients of t^0..t^(N-1)
and nothing beyond.  Binary operations truncate to the smaller order.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, isqrt
from typing import Iterable, Optional

from polyseq.exact import Poly, as_rat

DEFAULT_ORDER = 16


class SeriesError(ValueError):
    pass


class TruncSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: Optional[int] = None):
        cs = [as_rat(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise SeriesError("negative truncation order")
            cs = (cs + [Fraction(0)] * order)[:order]
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if not 0 <= i < self.order:
            raise SeriesError("insufficient truncation order")
        return self.coeffs[i]

    def valuation(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise SeriesError("insufficient truncation order")
        return TruncSeries(self.coeffs[:order])

    @classmethod
    def const(cls, c, order: int = DEFAULT_ORDER) -> "TruncSeries":
        return cls([c], order)

    @classmethod
    def var(cls, order: int = DEFAULT_ORDER, scale=1) -> "TruncSeries":
        """The series ``scale * t``."""
        return cls([0, scale], order)

    @classmethod
    def from_poly(cls, p: Poly, order: int = DEFAULT_ORDER) -> "TruncSeries":
        return cls(p.coeffs, order)

    def _coerce(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return other
        return TruncSeries.const(other, self.order)

    def __add__(self, other):
        if not isinstance(other, (TruncSeries, int, Fraction)):
            return NotImplemented
        return ser_add(self, self._coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return ser_scale(self, -1)

    def __sub__(self, other):
        if not isinstance(other, (TruncSeries, int, Fraction)):
            return NotImplemented
        return ser_add(self, -self._coerce(other))

    def __rsub__(self, other):
        return ser_add(self._coerce(other), -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ser_scale(self, other)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return ser_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return ser_scale(self, Fraction(1) / as_rat(other))
        return ser_div(self, other)

    def __rtruediv__(self, other):
        return ser_div(self._coerce(other), self)

    def __pow__(self, e: int):
        return ser_pow(self, e)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[:n] == other.coeffs[:n]

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"TruncSeries({[str(c) for c in self.coeffs]})"

    def derivative(self) -> "TruncSeries":
        return TruncSeries(i * c for i, c in enumerate(self.coeffs) if i)

    def compose(self, g: "TruncSeries") -> "TruncSeries":
        """f(g(t)) for g(0) = 0, by Horner."""
        if g.order and g.coeffs[0] != 0:
            raise SeriesError("composition requires zero constant term")
        n = min(self.order, g.order)
        out = TruncSeries.const(0, n)
        for c in reversed(self.coeffs[:n]):
            out = ser_mul(out, g) + c
        return out.truncate(n)


def ser_add(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    n = min(f.order, g.order)
    return TruncSeries(f.coeffs[i] + g.coeffs[i] for i in range(n))


def ser_scale(f: TruncSeries, c) -> TruncSeries:
    c = as_rat(c)
    return TruncSeries(c * a for a in f.coeffs)


def ser_mul(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    n = min(f.order, g.order)
    a, b = f.coeffs, g.coeffs
    out = [Fraction(0)] * n
    for i in range(n):
        if a[i]:
            ai = a[i]
            for j in range(n - i):
                out[i + j] += ai * b[j]
    return TruncSeries(out)


def ser_pow(f: TruncSeries, e: int) -> TruncSeries:
    if e < 0:
        return ser_div(TruncSeries.const(1, f.order), ser_pow(f, -e))
    out = TruncSeries.const(1, f.order)
    base = f
    while e:
        if e & 1:
            out = ser_mul(out, base)
        base = ser_mul(base, base)
        e >>= 1
    return out


def ser_exp(f: TruncSeries) -> TruncSeries:
    """exp(f) via g' = f' g."""
    if f.order == 0:
        return f
    if f.coeffs[0] != 0:
        raise SeriesError("exp requires zero constant term")
    n = f.order
    a = f.coeffs
    g = [Fraction(0)] * n
    g[0] = Fraction(1)
    for m in range(1, n):
        s = Fraction(0)
        for k in range(1, m + 1):
            if a[k]:
                s += k * a[k] * g[m - k]
        g[m] = s / m
    return TruncSeries(g)


def _rational_sqrt(c: Fraction) -> Optional[Fraction]:
    if c < 0:
        return None
    p, q = c.numerator, c.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


def ser_sqrt(f: TruncSeries) -> TruncSeries:
    """Square root with positive rational constant term."""
    if f.order == 0:
        return f
    c = _rational_sqrt(f.coeffs[0])
    if not c:
        raise SeriesError("non-square constant term")
    n = f.order
    g = [Fraction(0)] * n
    g[0] = c
    for m in range(1, n):
        s = sum((g[k] * g[m - k] for k in range(1, m)), Fraction(0))
        g[m] = (f.coeffs[m] - s) / (2 * c)
    return TruncSeries(g)


def ser_div(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """f / g after cancelling the common power t^valuation(g).

    The result order is ``min(order) - valuation(g)``.
    """
    n = min(f.order, g.order)
    vg = g.truncate(n).valuation()
    if vg is None:
        raise SeriesError("division by zero series")
    vf = f.truncate(n).valuation()
    if vf is not None and vf < vg:
        raise SeriesError("non-formal quotient")
    a = f.coeffs[vg:n]
    b = g.coeffs[vg:n]
    m = n - vg
    out = [Fraction(0)] * m
    inv = 1 / b[0]
    for i in range(m):
        s = a[i]
        for j in range(1, i + 1):
            if b[j]:
                s -= b[j] * out[i - j]
        out[i] = s * inv
    return TruncSeries(out)


def ser_integrate(f: TruncSeries) -> TruncSeries:
    return TruncSeries([0] + [c / (i + 1) for i, c in enumerate(f.coeffs)])


def _polylog(weight, f: TruncSeries) -> TruncSeries:
    if f.order and f.coeffs[0] != 0:
        raise SeriesError("polylogarithm argument requires zero constant term")
    n = f.order
    out = TruncSeries.const(0, n)
    power = TruncSeries.const(1, n)
    for i in range(1, n):
        power = ser_mul(power, f)
        if power.valuation() is None:
            break
        out = out + ser_scale(power, weight(i))
    return out


def polylog_neg(k: int, f: TruncSeries) -> TruncSeries:
    """Li_{-k}(f) = sum_i i^k f^i, for k >= 0."""
    if k < 0:
        raise ValueError("polylog_neg takes k >= 0")
    return _polylog(lambda i: i**k, f)


def polylog_pos(k: int, f: TruncSeries) -> TruncSeries:
    """Li_k(f) = sum_i f^i / i^k, for k >= 1."""
    if k < 1:
        raise ValueError("polylog_pos takes k >= 1")
    return _polylog(lambda i: Fraction(1, i**k), f)


def polylog(k: int, f: TruncSeries) -> TruncSeries:
    return polylog_pos(k, f) if k > 0 else polylog_neg(-k, f)


def egf_coeff(f: TruncSeries, n: int) -> Fraction:
    if n >= f.order:
        raise SeriesError("insufficient truncation order")
    return f.coeffs[n] * factorial(n)


def exp_linear(c, order: int = DEFAULT_ORDER) -> TruncSeries:
    """e^{c t}."""
    return ser_exp(TruncSeries.var(order, c))


def one_minus_exp_neg(c, order: int = DEFAULT_ORDER) -> TruncSeries:
    """1 - e^{-c t}."""
    return 1 - exp_linear(-as_rat(c), order)
