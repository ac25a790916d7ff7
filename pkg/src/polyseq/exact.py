"""Exact scalars and dense univariate polynomials over the rationals.

Scalars are :class:`fractions.Fraction` (plain ``int`` is accepted wherever a
rational is expected).  :class:`Poly` is immutable and normalized on
construction, so ``==`` is mathematical equality.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Iterable, Union

Scalar = Union[int, Fraction]

NEG_INF = float("-inf")


def as_rat(a) -> Fraction:
    if isinstance(a, Fraction):
        return a
    if isinstance(a, (int, Rational)):
        return Fraction(a)
    if isinstance(a, str):
        return Fraction(a.strip())
    raise TypeError(f"not an exact rational: {a!r}")


class Poly:
    """Dense polynomial in X; ``coeffs[i]`` is the coefficient of X**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, deg: int, c: Scalar = 1) -> "Poly":
        return cls([0] * deg + [c])

    @property
    def degree(self):
        """Degree; the zero polynomial has degree ``-inf``."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    # arithmetic

    @staticmethod
    def _lift(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(as_rat(other))

    def __add__(self, other) -> "Poly":
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        o = self._lift(other).coeffs
        a = self.coeffs
        n = max(len(a), len(o))
        return Poly((a[i] if i < len(a) else 0) + (o[i] if i < len(o) else 0) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Poly":
        return self._lift(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            c = as_rat(other)
            return Poly(c * a for a in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "Poly":
        c = as_rat(c)
        return Poly(a / c for a in self.coeffs)

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Poly.const(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, a):
        return poly_eval(self, a)

    # calculus / composition

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def compose(self, q: "Poly") -> "Poly":
        """p(q(X)) by Horner."""
        out = Poly()
        for c in reversed(self.coeffs):
            out = out * q + c
        return out

    def shift(self, c: Scalar) -> "Poly":
        """p(X + c)."""
        return self.compose(Poly((c, 1)))

    def reversed(self, n: int) -> "Poly":
        """X**n p(1/X); requires deg p <= n."""
        if self.degree > n:
            raise ValueError("degree exceeds reversal length")
        cs = list(self.coeffs) + [0] * (n + 1 - len(self.coeffs))
        return Poly(reversed(cs))

    # rendering

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return self.render()

    def render(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


X = Poly((0, 1))
ONE = Poly.const(1)
ZERO = Poly()


def poly_eval(p: Poly, a):
    """Horner evaluation; ``a`` may be a rational or a Poly (composition)."""
    if isinstance(a, Poly):
        return p.compose(a)
    a = as_rat(a)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * a + c
    return acc


def binom(a: Scalar, j: int) -> Fraction:
    """Generalized binomial a(a-1)...(a-j+1)/j! for rational a, integer j >= 0."""
    if j < 0:
        raise ValueError("binomial depth must be nonnegative")
    a = as_rat(a)
    num = Fraction(1)
    for i in range(j):
        num *= a - i
    return num / factorial(j)


def pochhammer(p, n: int):
    """Rising factorial p(p+1)...(p+n-1); Poly in, Poly out, rational in, rational out."""
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    if isinstance(p, Poly):
        out = ONE
        for i in range(n):
            out = out * (p + i)
        return out
    a = as_rat(p)
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def poly_sum(polys: Iterable[Poly]) -> Poly:
    out = ZERO
    for p in polys:
        out = out + p
    return out
