"""Poly-Bernoulli polynomials B_n^{(-k)}(x) and their relatives.

Four independent routes give the same polynomial for k >= 0 (upper index -k):
the Stirling closed form, the sieve formula, the binomial expansion in the
poly-Bernoulli numbers, and coefficient extraction from the generating
function Li_k(1-e^{-t}) / (1-e^{-t}) * e^{xt}.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from polyseq.exact import X, Poly, as_rat, pochhammer, poly_eval, poly_sum
from polyseq.series import TruncSeries, egf_coeff, exp_linear, one_minus_exp_neg, polylog, ser_div
from polyseq.stirling import stirling1, stirling1_weighted, stirling2, stirling2_weighted

METHODS = ("closed", "sieve", "binomial")


def _check(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")


@lru_cache(maxsize=None)
def pb_poly_closed(n: int, k: int) -> Poly:
    """B_n^{(-k)}(x) = sum_m (m!)^2 {k+1, m+1} [n m]_{x+1}."""
    _check(n, k)
    return poly_sum(
        factorial(m) ** 2 * stirling2(k + 1, m + 1) * stirling2_weighted(n, m).shift(1)
        for m in range(min(n, k) + 1)
    )


def pb_poly_sieve(n: int, k: int) -> Poly:
    """B_n^{(-k)}(x) = sum_m {k, m} (-1)^(k+m) m! (m+x+1)^n."""
    _check(n, k)
    return poly_sum(
        (-1) ** (k + m) * stirling2(k, m) * factorial(m) * (X + (m + 1)) ** n
        for m in range(k + 1)
    )


@lru_cache(maxsize=None)
def pb_number(n: int, k: int) -> int:
    """Poly-Bernoulli number B_n^{(-k)} = B_n^{(-k)}(0)."""
    v = pb_poly_closed(n, k).coeff(0)
    return int(v)


def pb_poly_binomial(n: int, k: int) -> Poly:
    """B_n^{(-k)}(x) = sum_j C(n, j) B_{n-j}^{(-k)} x^j."""
    _check(n, k)
    return Poly(comb(n, j) * pb_number(n - j, k) for j in range(n + 1))


def pb_poly(n: int, k: int, method: str = "closed") -> Poly:
    if method == "closed":
        return pb_poly_closed(n, k)
    if method == "sieve":
        return pb_poly_sieve(n, k)
    if method == "binomial":
        return pb_poly_binomial(n, k)
    raise ValueError(f"unknown method {method!r}")


def pb_egf_series(k: int, x, order: int) -> TruncSeries:
    """Li_k(1-e^{-t}) / (1-e^{-t}) * e^{xt}; the result has order ``order - 1``."""
    z = one_minus_exp_neg(1, order)
    return ser_div(polylog(k, z), z) * exp_linear(as_rat(x), order - 1)


def pb_egf(n: int, k: int, x=0, order: int | None = None) -> Fraction:
    """B_n^{(k)}(x) for any integer k via the generating function."""
    if order is None:
        order = n + 2
    if order < n + 2:
        raise ValueError("truncation order must exceed n + 1")
    return egf_coeff(pb_egf_series(k, x, order), n)


def pb_typeC(n: int, k: int) -> int:
    """C_n^{(-k)} = B_n^{(-k)}(-1)."""
    return int(poly_eval(pb_poly_closed(n, k), -1))


def c_sym(n: int, k: int, r, s, method: str = "A"):
    """C_n^{(-k)}(r, s); method A is the binomial sum, method B the Stirling form."""
    r, s = as_rat(r), as_rat(s)
    if method == "A":
        v = sum(
            (comb(k, j) * poly_eval(pb_poly_closed(n, j), r) * s ** (k - j) for j in range(k + 1)),
            Fraction(0),
        )
    elif method == "B":
        v = sum(
            (
                factorial(m) ** 2
                * poly_eval(stirling2_weighted(n, m), r + 1)
                * poly_eval(stirling2_weighted(k, m), s + 1)
                for m in range(min(n, k) + 1)
            ),
            Fraction(0),
        )
    else:
        raise ValueError(f"unknown method {method!r}")
    return int(v) if v.denominator == 1 else v


def hypersum(k: int, r: int, n: int) -> int:
    """S_k^{(r)}(n): the r-fold iterated partial sum of 1^k + ... + n^k."""
    if r < 0 or n < 0:
        raise ValueError("r and n must be nonnegative")
    row = [0] * (n + 1)
    acc = 0
    for i in range(1, n + 1):
        acc += i**k
        row[i] = acc
    for _ in range(r):
        acc = 0
        for i in range(1, n + 1):
            acc += row[i]
            row[i] = acc
    return row[n]


def ber_hypersum_sides(n: int, k: int, x, y) -> tuple[Fraction, Fraction]:
    """Both sides of sum_j stf{n}{j}_y B_j^{(-k)}(x) = sum_l C(n,l)(x+y)_{n-l} l! (l+1)^k."""
    x, y = as_rat(x), as_rat(y)
    lhs = sum(
        (poly_eval(stirling1_weighted(n, j), y) * poly_eval(pb_poly_closed(j, k), x) for j in range(n + 1)),
        Fraction(0),
    )
    rhs = sum(
        (comb(n, l) * pochhammer(x + y, n - l) * factorial(l) * (l + 1) ** k for l in range(n + 1)),
        Fraction(0),
    )
    return lhs, rhs


def ber_hypersum_check(n: int, k: int, x, y) -> bool:
    lhs, rhs = ber_hypersum_sides(n, k, x, y)
    return lhs == rhs


def hypersum_corollary_check(n: int, k: int, m: int, r: int) -> bool:
    """sum_j stf{n}{j}_r B_j^{(-k)}(m) = n! S_k^{(m+r-1)}(n+1), for m + r > 0."""
    if m + r <= 0:
        raise ValueError("requires m + r > 0")
    lhs, _ = ber_hypersum_sides(n, k, m, r)
    return lhs == factorial(n) * hypersum(k, m + r - 1, n + 1)


def power_sum_corollary_check(n: int, k: int) -> bool:
    """sum_j [n+1, j+1] B_j^{(-k)} = n! S_k(n+1), with classical unsigned Stirling numbers."""
    lhs = sum(stirling1(n + 1, j + 1) * pb_number(j, k) for j in range(n + 1))
    return lhs == factorial(n) * hypersum(k, 0, n + 1)
