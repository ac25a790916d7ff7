from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import polys, rationals
from polyseq.exact import ONE, ZERO, X, Poly, as_rat, binom, pochhammer, poly_eval, poly_sum


def test_binom_examples():
    assert binom(4, 2) == 6
    assert binom(Fraction(7, 3), 0) == 1
    assert binom(Fraction(5, 2), 2) == Fraction(15, 8)


def test_pochhammer_examples():
    assert pochhammer(X, 0) == ONE
    assert pochhammer(X, 2) == X**2 + X
    assert pochhammer(5, 3) == 210


def test_poly_eval_examples():
    assert poly_eval(X**2 + X, 2) == 6
    assert poly_eval(ZERO, Fraction(3, 4)) == 0
    assert poly_eval(3 * X**2 + 6 * X + 2, 1) == 11


def test_normalization_and_degree():
    p = Poly([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert ZERO.degree == float("-inf")
    assert ZERO.is_zero


def test_immutable():
    p = X + 1
    with pytest.raises(AttributeError):
        p.coeffs = (0,)


def test_render():
    assert (4 * X**2 + 7 * X + 1).render() == "4*x^2 + 7*x + 1"
    assert (X - Fraction(1, 2)).render() == "x - 1/2"
    assert ZERO.render() == "0"


def test_as_rat_rejects_floats():
    assert as_rat("3/4") == Fraction(3, 4)
    with pytest.raises(TypeError):
        as_rat(0.5)


@given(polys(), polys(), rationals)
def test_ring_homomorphism(a, b, x):
    p, q = Poly(a), Poly(b)
    assert poly_eval(p + q, x) == poly_eval(p, x) + poly_eval(q, x)
    assert poly_eval(p * q, x) == poly_eval(p, x) * poly_eval(q, x)


@given(polys(), polys(), polys())
def test_ring_laws(a, b, c):
    p, q, r = Poly(a), Poly(b), Poly(c)
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p - p == ZERO


@given(polys(), polys(3), rationals)
def test_compose_is_evaluation(a, b, x):
    p, q = Poly(a), Poly(b)
    assert poly_eval(p.compose(q), x) == poly_eval(p, poly_eval(q, x))


@given(polys(), rationals, rationals)
def test_shift(a, c, x):
    p = Poly(a)
    assert poly_eval(p.shift(c), x) == poly_eval(p, x + c)


@given(polys(), rationals)
def test_reversed(a, x):
    p = Poly(a)
    if p.is_zero or x == 0:
        return
    n = p.degree
    assert poly_eval(p.reversed(n), x) == x**n * poly_eval(p, 1 / x)


@given(rationals, st.integers(0, 6))
def test_pochhammer_matches_product(a, n):
    prod = Fraction(1)
    for i in range(n):
        prod *= a + i
    assert pochhammer(a, n) == prod
    assert poly_eval(pochhammer(X, n), a) == prod


@given(st.integers(0, 12), st.integers(0, 12))
def test_binom_integer_agrees_with_math(a, j):
    from math import comb

    assert binom(a, j) == comb(a, j)


def test_poly_sum():
    assert poly_sum([X, X, ONE]) == 2 * X + 1
    assert poly_sum([]) == ZERO
