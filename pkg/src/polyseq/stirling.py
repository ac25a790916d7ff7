"""Stirling numbers and the weighted (Carlitz-style) Stirling polynomials.

``stirling2_weighted(n, m)`` counts partitions of {1..n} + {dagger} into m+1
blocks, weighted by x^(|dagger block| - 1).  ``stirling1_weighted(n, m)``
counts permutations of {0..n} with m+1 cycles, weighted by the number of
left-to-right minima following 0 in its cycle.  Both are computed by their
recursions; the defining enumerations live in :mod:`polyseq.enumerate`.
"""

from __future__ import annotations

from functools import lru_cache

from polyseq.exact import ZERO, X, Poly, pochhammer, poly_eval


@lru_cache(maxsize=None)
def stirling2(n: int, m: int) -> int:
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    if m > n:
        return 0
    if n == 0:
        return 1
    if m == 0:
        return 0
    return m * stirling2(n - 1, m) + stirling2(n - 1, m - 1)


@lru_cache(maxsize=None)
def stirling1(n: int, m: int) -> int:
    """Unsigned Stirling number of the first kind (permutations with m cycles)."""
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    if m > n:
        return 0
    if n == 0:
        return 1
    if m == 0:
        return 0
    return (n - 1) * stirling1(n - 1, m) + stirling1(n - 1, m - 1)


@lru_cache(maxsize=None)
def stirling2_weighted(n: int, m: int) -> Poly:
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    if m > n:
        return ZERO
    if m == 0:
        return X**n
    # [n m]_x = (x+m)[n-1 m]_x + [n-1 m-1]_x
    return (X + m) * stirling2_weighted(n - 1, m) + stirling2_weighted(n - 1, m - 1)


def rstirling2(n: int, m: int, r) -> int:
    """r-Stirling number of the second kind (r elements in distinct blocks)."""
    v = poly_eval(stirling2_weighted(n, m), r)
    return int(v) if v.denominator == 1 else v


@lru_cache(maxsize=None)
def stirling1_weighted(n: int, m: int) -> Poly:
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    if m > n:
        return ZERO
    if m == 0:
        return pochhammer(X, n)
    # stf{n}{m}_x = stf{n-1}{m-1}_x + (x+n-1) stf{n-1}{m}_x
    return stirling1_weighted(n - 1, m - 1) + (X + (n - 1)) * stirling1_weighted(n - 1, m)
