"""Lehmer's polynomials p_k, q_k, the central binomial series at non-positive
integers, and the a_n = b_n identity linking them to poly-Bernoulli numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from polyseq.eulerian import eulerian_rec
from polyseq.exact import ONE, ZERO, X, Poly, as_rat, pochhammer, poly_eval
from polyseq.polybernoulli import pb_number
from polyseq.series import (
    TruncSeries,
    exp_linear,
    ser_div,
    ser_integrate,
    ser_pow,
    ser_sqrt,
)

# pi / sqrt(3) to 60 significant digits
PI_OVER_SQRT3 = Decimal("1.81379936423421785059407825764215573228406624809274057556988")

QUARTER = Fraction(1, 4)


class PoleError(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class PQPair:
    k: int
    p: Poly
    q: Poly


@lru_cache(maxsize=None)
def pq(k: int) -> PQPair:
    if k < -1:
        raise ValueError("k must be >= -1")
    if k == -1:
        return PQPair(-1, ZERO, ONE)
    prev = pq(k - 1)
    j = k - 1
    w = 2 * X * (1 - X)
    p = 2 * (j * X + 1) * prev.p + w * prev.p.derivative() + prev.q
    q = (2 * (j + 1) * X + 1) * prev.q + w * prev.q.derivative()
    return PQPair(k, p, q)


def a_seq(n: int) -> Fraction:
    return Fraction(2, 3) ** n * poly_eval(pq(n).p, QUARTER)


def b_seq(n: int) -> int:
    return sum(pb_number(n - k, k) for k in range(n + 1))


def _rec_rhs(seq, n: int):
    return 2 * seq(n) + sum(comb(n + 1, k) * seq(k) for k in range(n + 1)) + 3


def a_recursion_holds(n: int) -> bool:
    return 3 * a_seq(n + 1) == _rec_rhs(a_seq, n)


def b_recursion_holds(n: int) -> bool:
    return 3 * b_seq(n + 1) == _rec_rhs(b_seq, n)


def a_ode_residual(order: int) -> TruncSeries:
    """(4 - e^t) A' - (2 + e^t) A - 3 e^t for A = sum a_n t^n / n!, to ``order``."""
    A = TruncSeries([a_seq(n) / factorial(n) for n in range(order + 1)])
    et = exp_linear(1, order)
    return (4 - et) * A.derivative() - (2 + et) * A.truncate(order) - 3 * et


def ab_recursion_check(n: int) -> bool:
    if n < 0:
        raise ValueError("n must be nonnegative")
    ode_ok = all(c == 0 for c in a_ode_residual(n + 1).coeffs)
    return a_recursion_holds(n) and b_recursion_holds(n) and ode_ok


def stephan_check(N: int) -> bool:
    return all(a_seq(n) == b_seq(n) for n in range(N + 1))


@dataclass(frozen=True)
class PiSqrt3Value:
    """u + v * pi/sqrt(3) with rational u, v."""

    u: Fraction
    v: Fraction

    def __add__(self, other: "PiSqrt3Value") -> "PiSqrt3Value":
        return PiSqrt3Value(self.u + other.u, self.v + other.v)

    def scale(self, c) -> "PiSqrt3Value":
        c = as_rat(c)
        return PiSqrt3Value(self.u * c, self.v * c)

    def to_decimal(self, digits: int = 50) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = digits + 5
            u = Decimal(self.u.numerator) / Decimal(self.u.denominator)
            v = Decimal(self.v.numerator) / Decimal(self.v.denominator)
            return +(u + v * PI_OVER_SQRT3)

    def __str__(self) -> str:
        return f"{self.u} + {self.v}*pi/sqrt(3)"


def zeta_cb_neg(k: int) -> PiSqrt3Value:
    """Exact value of sum_{n>=1} n^k / C(2n, n)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    pair = pq(k)
    u = Fraction(1, 3) * Fraction(2, 3) ** k * poly_eval(pair.p, QUARTER)
    v = Fraction(1, 3) * Fraction(2, 3) ** (k + 1) * poly_eval(pair.q, QUARTER)
    return PiSqrt3Value(u, v)


def zeta_cb_partial(k: int, M: int) -> tuple[Fraction, Fraction]:
    """Partial sum over n <= M and an upper bound on the remaining tail.

    Term ratios t_{n+1}/t_n = ((n+1)/n)^k (n+1)/(2(2n+1)) decrease in n, so the
    tail after M is at most t_{M+1} / (1 - ratio(M+1)) once that ratio is < 1.
    """
    s = sum((Fraction(n**k, comb(2 * n, n)) for n in range(1, M + 1)), Fraction(0))
    n = M + 1
    ratio = Fraction(n + 1, n) ** k * Fraction(n + 1, 2 * (2 * n + 1))
    if ratio >= 1:
        raise ValueError("partial-sum cutoff too small for a geometric tail bound")
    tail = Fraction(n**k, comb(2 * n, n)) / (1 - ratio)
    return s, tail


def zeta_cb_residual(k: int, M: int = 200) -> Decimal:
    """|exact value - partial sum| (decimal); must not exceed the tail bound."""
    s, _ = zeta_cb_partial(k, M)
    with localcontext() as ctx:
        ctx.prec = 55
        return abs(zeta_cb_neg(k).to_decimal() - Decimal(s.numerator) / Decimal(s.denominator))


def q_eulerian_check(n: int) -> bool:
    """q_n(x) = (2x)^n E_n^{1/2}(1/x)."""
    e = eulerian_rec(n, Fraction(1, 2))
    return pq(n).q == e.reversed(n) * 2**n


def p_explicit_check(n: int) -> bool:
    """p_n = 2^n E_n^0 + sum_{k=1}^n C(n,k) q_{n-k} q_{k-2}."""
    rhs = eulerian_rec(n, 0) * 2**n
    for k in range(1, n + 1):
        rhs = rhs + comb(n, k) * pq(n - k).q * pq(k - 2).q
    return pq(n).p == rhs


def lehmer_series_sides(k: int, order: int) -> tuple[TruncSeries, TruncSeries]:
    if k < -1:
        raise ValueError("k must be >= -1")
    if order < 4:
        raise ValueError("order must be >= 4")
    lhs = [Fraction(0)] * order
    for n in range(1, (order - 1) // 2 + 1):
        lhs[2 * n] = Fraction(2 * n) ** k * 4**n / comb(2 * n, n)
    lhs = TruncSeries(lhs)

    n_ext = order + 2
    x = TruncSeries.var(n_ext)
    one_minus_x2 = 1 - x * x
    s = ser_sqrt(one_minus_x2)
    arcsin = ser_integrate(ser_div(TruncSeries.const(1, n_ext), s)).truncate(n_ext)
    pair = pq(k)
    pk = TruncSeries.from_poly(pair.p.compose(X * X), n_ext)
    qk = TruncSeries.from_poly(pair.q.compose(X * X), n_ext)
    # (1-x^2)^{-k-3/2} = sqrt(1-x^2) / (1-x^2)^{k+2}
    factor = ser_div(s, ser_pow(one_minus_x2, k + 2))
    rhs = x * factor * (x * s * pk + arcsin * qk)
    return lhs, rhs.truncate(order)


def lehmer_series_check(k: int, order: int) -> bool:
    lhs, rhs = lehmer_series_sides(k, order)
    return lhs == rhs


def F(j: int, x, y) -> Fraction:
    """F_j(x, y) = (j!)^2 / ((x)_j (y)_j), with F_{-1} = 0."""
    if j < -1:
        raise ValueError("j must be >= -1")
    if j == -1:
        return Fraction(0)
    x, y = as_rat(x), as_rat(y)
    px, py = pochhammer(x, j), pochhammer(y, j)
    for name, arg, val in (("x", x, px), ("y", y, py)):
        if val == 0:
            raise PoleError(f"pole of F_j: ({arg})_{j} = 0 in argument {name}")
    return Fraction(factorial(j) ** 2) / (px * py)


def trans_sides(j: int, x, y) -> tuple[Fraction, Fraction]:
    x, y = as_rat(x), as_rat(y)
    lhs = (
        (x - 1) * (x - 2) * (F(j, x - 2, y) - F(j - 1, x - 2, y))
        + (x - 1) * (2 * x - 5) * F(j - 1, x - 1, y)
        - (x - 1) * (x - y - 1) * F(j, x - 1, y)
        - (x - 2) ** 2 * F(j - 1, x, y)
    )
    rhs = (x - 1) * (y - 1) if j == 0 else Fraction(0)
    return lhs, rhs


def trans_check(j: int, x, y) -> bool:
    if j < 0:
        raise ValueError("j must be nonnegative")
    lhs, rhs = trans_sides(j, x, y)
    return lhs == rhs


@dataclass(frozen=True)
class Enclosure:
    lo: Fraction
    hi: Fraction

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def radius(self) -> Fraction:
        return (self.hi - self.lo) / 2

    def __add__(self, other):
        if isinstance(other, Enclosure):
            return Enclosure(self.lo + other.lo, self.hi + other.hi)
        c = as_rat(other)
        return Enclosure(self.lo + c, self.hi + c)

    def __sub__(self, other):
        if isinstance(other, Enclosure):
            return Enclosure(self.lo - other.hi, self.hi - other.lo)
        c = as_rat(other)
        return Enclosure(self.lo - c, self.hi - c)

    def scale(self, c) -> "Enclosure":
        c = as_rat(c)
        a, b = self.lo * c, self.hi * c
        return Enclosure(min(a, b), max(a, b))


def F_series_enclosure(a, b, J: int) -> tuple[Fraction, Enclosure]:
    """Rigorous enclosure of sum_{j>=0} F_j(a, b) from the partial sum over j <= J.

    With R(j) = (j + alpha)/beta chosen so that R(j) - R(j+1) F_{j+1}/F_j
    = 1 + K/((j+a)(j+b)), the tail T = sum_{j>J} F_j satisfies
    sum_{j>J} F_j (1 + delta_j) = R(J+1) F_{J+1}, |delta_j| <= eps, hence
    T lies in [G/(1+eps), G/(1-eps)] with G = R(J+1) F_{J+1}.
    Requires a, b > 0 and a + b > 3 (so R(j) F_j -> 0).
    """
    a, b = as_rat(a), as_rat(b)
    if a <= 0 or b <= 0 or a + b <= 3:
        raise ValueError("tail enclosure needs a, b > 0 and a + b > 3")
    partial = Fraction(0)
    term = Fraction(1)
    for j in range(J + 1):
        if j:
            term = term * Fraction(j * j) / ((a + j - 1) * (b + j - 1))
        partial += term
    beta = a + b - 3
    alpha = (beta * (a + b) - a * b + 3) / (a + b - 2)
    K = ((alpha - beta) * a * b - 1 - alpha) / beta
    nxt = term * Fraction((J + 1) ** 2) / ((a + J) * (b + J))  # F_{J+1}
    G = (J + 1 + alpha) / beta * nxt
    eps = abs(K) / ((J + 1 + a) * (J + 1 + b))
    if eps >= 1:
        raise ValueError("cutoff J too small for the tail enclosure")
    tail = Enclosure(G / (1 + eps), G / (1 - eps))
    return partial, tail + partial


@dataclass(frozen=True)
class KeyEqualityResult:
    ok: bool
    naive_difference: Fraction
    difference: Enclosure


def _as_tol(tol) -> Fraction:
    return Fraction(str(tol)) if isinstance(tol, float) else as_rat(tol)


def key_equality(x, J: int = 200, tol=Fraction(1, 10**10)) -> KeyEqualityResult:
    """Compare both sides of the b_n recursion's hypergeometric form at rational x < 0.

    ``ok`` is true iff the rigorous enclosure of LHS - RHS lies inside (-tol, tol).
    """
    x = as_rat(x)
    tol = _as_tol(tol)
    if x == 0:
        raise PoleError("pole of F_j: x = 0")
    c2, c3 = 2 - 1 / x, 3 - 1 / x
    for j in (J, J + 1):
        F(j, c2, c2)
        F(j, c3, c3)
    if x >= 0:
        raise ValueError("key equality check needs x < 0")
    if J < 10:
        raise ValueError("J must be >= 10")
    s2, enc2 = F_series_enclosure(c2, c2, J)
    s3, enc3 = F_series_enclosure(c3, c3, J)
    lhs_coef = 2 * (2 - x) / (1 - x) ** 2
    rhs_coef = (1 - x) / (1 - 2 * x) ** 2
    rhs_const = 3 / (1 - x)
    naive = lhs_coef * s2 - (rhs_const + rhs_coef * s3)
    diff = enc2.scale(lhs_coef) - (enc3.scale(rhs_coef) + rhs_const)
    return KeyEqualityResult(-tol < diff.lo and diff.hi < tol, naive, diff)


def key_equality_check(x, J: int = 200, tol=Fraction(1, 10**10)) -> bool:
    return key_equality(x, J, tol).ok


def bn_ogf_series(J: int, order: int) -> TruncSeries:
    x = TruncSeries.var(order)
    total = TruncSeries.const(0, order)
    for j in range(J + 1):
        if 2 * j >= order:
            break
        den = TruncSeries.const(1, order)
        for i in range(1, j + 2):
            den = den * (1 - x * i) ** 2
        num = TruncSeries([0] * (2 * j) + [factorial(j) ** 2], order)
        total = total + ser_div(num, den)
    return total


def bn_ogf_check(N: int, J: int | None = None) -> bool:
    if J is None:
        J = (N + 1) // 2
    if 2 * J < N:
        raise ValueError("J must be at least ceil(N/2)")
    s = bn_ogf_series(J, N + 1)
    return all(s[n] == b_seq(n) for n in range(N + 1))
