from fractions import Fraction as F

from hypothesis import given, strategies as st

from conftest import rationals
from polyseq.exact import X, poly_eval
from polyseq.polybernoulli import (
    ber_hypersum_check,
    ber_hypersum_sides,
    c_sym,
    hypersum,
    hypersum_corollary_check,
    pb_egf,
    pb_number,
    pb_poly,
    pb_poly_binomial,
    pb_poly_closed,
    pb_poly_sieve,
    pb_typeC,
    power_sum_corollary_check,
)

nk = st.tuples(st.integers(0, 7), st.integers(0, 6))


def test_closed_form_examples():
    assert all(pb_poly_closed(0, k) == 1 for k in range(5))
    assert pb_poly_closed(1, 1) == X + 2
    assert poly_eval(pb_poly_closed(2, 2), 0) == 14
    assert poly_eval(pb_poly_closed(1, 1), 1) == 3
    assert all(pb_poly_closed(n, 0) == (X + 1) ** n for n in range(6))


def test_other_forms_examples():
    assert pb_poly_sieve(2, 2) == pb_poly_closed(2, 2) == X**2 + 8 * X + 14
    assert all(pb_poly_sieve(1, k) == X + 2**k for k in range(6))
    assert all(pb_poly_binomial(0, k) == 1 for k in range(4))
    assert pb_poly_binomial(2, 1) == X**2 + 4 * X + 4


def test_egf_examples():
    assert pb_egf(1, 1, 0) == F(1, 2)
    assert pb_egf(1, -1, 0) == 2
    assert pb_egf(2, -2, 0) == 14
    for x in (F(0), F(1, 3), F(-2)):
        assert -pb_egf(1, 1, -x) == x - F(1, 2)


def test_typeC_examples():
    assert pb_typeC(0, 0) == 1
    assert all(pb_typeC(1, k) == 2**k - 1 for k in range(6))
    assert pb_typeC(2, 2) == 7


def test_c_sym_examples():
    assert c_sym(1, 1, 0, 0) == c_sym(1, 1, 0, 0, "B") == 2
    assert all(c_sym(0, k, r, s, "B") == (s + 1) ** k for k in range(4) for r in range(3) for s in range(3))


def test_hypersum_examples():
    assert hypersum(1, 0, 2) == 3
    assert hypersum(1, 1, 2) == 4
    assert all(hypersum(k, r, 0) == 0 for k in range(3) for r in range(3))


def test_ber_hypersum_examples():
    assert ber_hypersum_sides(1, 1, 0, 1) == (3, 3)
    assert ber_hypersum_sides(0, 3, 0, 0) == (1, 1)
    assert ber_hypersum_check(3, 2, 1, 1)


def test_pb_poly_dispatch():
    for m in ("closed", "sieve", "binomial"):
        assert pb_poly(3, 2, m) == pb_poly_closed(3, 2)


@given(nk)
def test_methods_agree(p):
    n, k = p
    c = pb_poly_closed(n, k)
    assert c == pb_poly_sieve(n, k) == pb_poly_binomial(n, k)


@given(nk)
def test_shape(p):
    n, k = p
    c = pb_poly_closed(n, k)
    assert c.degree == n and c.leading == 1
    assert all(a >= 0 and a.denominator == 1 for a in c.coeffs)


@given(st.integers(0, 9), st.integers(0, 9))
def test_number_symmetry(n, k):
    assert pb_number(n, k) == pb_number(k, n)


@given(st.integers(0, 5), st.integers(0, 4), rationals)
def test_egf_matches_closed(n, k, x):
    assert pb_egf(n, -k, x) == poly_eval(pb_poly_closed(n, k), x)


@given(st.integers(0, 6), st.integers(0, 5))
def test_typeC_is_value_at_minus_one(n, k):
    assert pb_typeC(n, k) == poly_eval(pb_poly_closed(n, k), -1)


@given(*(st.integers(0, 4),) * 4)
def test_c_sym_symmetry_and_methods(n, k, r, s):
    a = c_sym(n, k, r, s, "A")
    assert a == c_sym(n, k, r, s, "B") == c_sym(k, n, s, r, "A")


@given(st.integers(0, 5), st.integers(0, 4), rationals, rationals)
def test_ber_hypersum_identity(n, k, x, y):
    lhs, rhs = ber_hypersum_sides(n, k, x, y)
    assert lhs == rhs


@given(st.integers(0, 6), st.integers(0, 4), st.integers(0, 2), st.integers(0, 2))
def test_corollaries(n, k, m, r):
    if m + r == 0:
        return
    assert hypersum_corollary_check(n, k, m, r)
    assert power_sum_corollary_check(n, k)
