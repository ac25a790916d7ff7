"""Poly-Euler numbers with negative upper index.

First kind: ``E~_n^{(-k)} = n E_{n-1}^{(-k)}`` (the integer normalization; the
raw E_n^{(-k)} is exposed only through :func:`pe_raw_first`).  Second kind:
``E^_n^{(-k)}``.  Every route below must agree; positivity is checked after
the fact, never assumed.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from polyseq.polybernoulli import pb_number, pb_typeC
from polyseq.series import TruncSeries, egf_coeff, exp_linear, one_minus_exp_neg, polylog_neg, ser_div
from polyseq.stirling import stirling2

FIRST, SECOND = "first", "second"
ODD, EVEN = "odd", "even"


def _kind(kind: str) -> str:
    if kind in (FIRST, "1", ODD):
        return FIRST
    if kind in (SECOND, "2", EVEN):
        return SECOND
    raise ValueError(f"unknown poly-Euler kind {kind!r}")


def _check(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")


def pe_incexc(kind: str, n: int, k: int) -> int:
    """Inclusion-exclusion formulas (first kind: odd m, second kind: even m)."""
    kind = _kind(kind)
    _check(n, k)
    total = 0
    start = 1 if kind == FIRST else 0
    for m in range(start, n + 1, 2):
        inner = 0
        for l in range(k + 1):
            base = 2 * (2 * l + 1) if kind == FIRST else 4 * l + 2
            inner += (-1) ** l * factorial(l) * stirling2(k, l) * base ** (n - m)
        total += comb(n, m) * inner
    return (-1) ** k * total


def pe_closed_first(n: int, k: int) -> int:
    _check(n, k)
    total = 0
    for j in range((n + 1) // 2):
        inner = 0
        for m in range(k + 1):
            s_sum = sum(
                2 ** (m - s) * comb(m, s) * factorial(m + s) * stirling2(n - 2 * j, m + s + 1)
                for s in range(m + 1)
            )
            inner += factorial(m) * stirling2(k + 1, m + 1) * s_sum
        total += comb(n, 2 * j + 1) * 2 ** (n - 2 * j - 1) * inner
    return total


def pe_e0(parity: str, n: int) -> int:
    """E~_n^{(0)} (odd) or E^_n^{(0)} (even), by binomial sum and closed form."""
    kind = _kind(parity)
    if n < 0:
        raise ValueError("n must be nonnegative")
    start = 1 if kind == FIRST else 0
    by_sum = sum(comb(n, m) * 2 ** (n - m) for m in range(start, n + 1, 2))
    closed = (3**n - 1) // 2 if kind == FIRST else (3**n + 1) // 2
    if by_sum != closed:
        raise ArithmeticError(f"E0 mismatch at n={n}: {by_sum} != {closed}")
    return closed


def pe_ohno_sasaki(n: int, k: int) -> int:
    _check(n, k)
    if n == 0:
        return 0
    total = 0
    for m in range(min(n - 1, k) + 1):
        inner = sum(
            comb(n, l) * pe_e0(ODD, l) * stirling2(n - l, m) * 4 ** (n - l) for l in range(1, n - m + 1)
        )
        total += factorial(m) ** 2 * inner * stirling2(k + 1, m + 1)
    return total


def pe_via_typeC(kind: str, n: int, k: int) -> int:
    """Binomial convolution of E0 with the type-C poly-Bernoulli numbers."""
    kind = _kind(kind)
    _check(n, k)
    return sum(comb(n, l) * pe_e0(kind, l) * pb_typeC(n - l, k) * 4 ** (n - l) for l in range(n + 1))


def pe_egf_series(kind: str, k: int, order: int) -> TruncSeries:
    """Li_{-k}(1-e^{-4t}) / (4 cosh t) or / (4 sinh t)."""
    kind = _kind(kind)
    num = polylog_neg(k, one_minus_exp_neg(4, order))
    ep, em = exp_linear(1, order), exp_linear(-1, order)
    if kind == FIRST:
        den = (ep + em) * Fraction(2)  # 4 cosh t
    else:
        den = (ep - em) * Fraction(2)  # 4 sinh t
    return ser_div(num, den)


def pe_egf(kind: str, n: int, k: int, order: int | None = None) -> int:
    _check(n, k)
    if order is None:
        order = n + 2
    v = egf_coeff(pe_egf_series(kind, k, order), n)
    if v.denominator != 1:
        raise ArithmeticError(f"non-integral poly-Euler value {v}")
    return int(v)


def pe_raw_first(n: int, k: int) -> Fraction:
    """E_n^{(-k)} = E~_{n+1}^{(-k)} / (n+1); rational in general."""
    return Fraction(pe_incexc(FIRST, n + 1, k), n + 1)


def pe_value(kind: str, n: int, k: int, method: str = "incexc") -> int:
    kind = _kind(kind)
    if method == "incexc":
        return pe_incexc(kind, n, k)
    if method == "typeC":
        return pe_via_typeC(kind, n, k)
    if method == "egf":
        return pe_egf(kind, n, k)
    if kind == FIRST and method == "closed":
        return pe_closed_first(n, k)
    if kind == FIRST and method == "ohno_sasaki":
        return pe_ohno_sasaki(n, k)
    raise ValueError(f"method {method!r} not available for the {kind} kind")


def methods_for(kind: str) -> tuple[str, ...]:
    if _kind(kind) == FIRST:
        return ("incexc", "closed", "ohno_sasaki", "typeC", "egf")
    return ("incexc", "typeC", "egf")


# identities relating the two kinds to poly-Bernoulli numbers


def difference_check(n: int, k: int) -> bool:
    lhs = pe_incexc(SECOND, n, k) - pe_incexc(FIRST, n, k)
    rhs = sum(comb(n, l) * pb_typeC(n - l, k) * 4 ** (n - l) for l in range(n + 1))
    return lhs == rhs


def bernoulli_convolution_check(n: int, k: int) -> bool:
    """4^n B_n^{(-k)} = sum_m C(n, m) (E~_m + E^_m)."""
    rhs = sum(comb(n, m) * (pe_incexc(FIRST, m, k) + pe_incexc(SECOND, m, k)) for m in range(n + 1))
    return 4**n * pb_number(n, k) == rhs


def k_one_check(kind: str, n: int) -> bool:
    """E_n^{(-1)} = sum_l C(n, l) E_l^{(0)} 4^(n-l), either kind."""
    rhs = sum(comb(n, l) * pe_e0(kind, l) * 4 ** (n - l) for l in range(n + 1))
    return pe_incexc(kind, n, 1) == rhs
