"""r-Eulerian polynomials E_n^r(x) for integer and rational r."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from polyseq.exact import ONE, X, Poly, as_rat, binom
from polyseq.series import SeriesError, TruncSeries, egf_coeff, ser_exp, ser_pow, ser_sqrt


def eulerian_explicit(n: int, r) -> Poly:
    r = as_rat(r)
    coeffs = []
    for k in range(n + 1):
        c = Fraction(0)
        for j in range(k + 1):
            c += (-1) ** j * binom(n + r + 1, j) * binom(r + k - j, k - j) * (k + 1 - j) ** n
        coeffs.append(c)
    return Poly(coeffs)


@lru_cache(maxsize=None)
def _rec(n: int, r: Fraction) -> Poly:
    if n == 0:
        return ONE
    prev = _rec(n - 1, r)
    return X * (1 - X) * prev.derivative() + ((n - 1 + r) * X + 1) * prev


def eulerian_rec(n: int, r) -> Poly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _rec(n, as_rat(r))


def eulerian_number(n: int, k: int) -> int:
    """A(n, k): permutations of [n] with k ascending runs."""
    if k < 1 or k > n:
        return 0
    return int(eulerian_rec(n, 0).coeff(k - 1))


def eulerian_egf_series(r, x0, order: int) -> TruncSeries:
    """e^{t(1-x0)} ((1-x0) / (1 - x0 e^{t(1-x0)}))^{r+1} as a series in t.

    ``r + 1`` must be an integer or a half-integer.
    """
    r, x0 = as_rat(r), as_rat(x0)
    if x0 == 1:
        raise SeriesError("x0 = 1 is a singular point")
    e = ser_exp(TruncSeries.var(order, 1 - x0))
    base = (1 - x0) / (1 - e * x0)
    power = r + 1
    if power.denominator == 1:
        g = ser_pow(base, int(power))
    elif power.denominator == 2:
        g = ser_sqrt(ser_pow(base, int(2 * power)))
    else:
        raise SeriesError("r + 1 must be an integer or half-integer")
    return e * g


def eulerian_egf(n: int, r, x0, order: int | None = None) -> Fraction:
    if order is None:
        order = n + 1
    return egf_coeff(eulerian_egf_series(r, x0, order), n)
