from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from polyseq.exact import ONE, X, ZERO
from polyseq.stephan import (
    F as Fj,
    PoleError,
    a_recursion_holds,
    a_ode_residual,
    a_seq,
    ab_recursion_check,
    b_recursion_holds,
    b_seq,
    bn_ogf_check,
    bn_ogf_series,
    key_equality,
    key_equality_check,
    lehmer_series_check,
    p_explicit_check,
    pq,
    q_eulerian_check,
    stephan_check,
    trans_check,
    trans_sides,
    zeta_cb_neg,
    zeta_cb_partial,
    zeta_cb_residual,
)


def test_lehmer_polynomials():
    assert (pq(-1).p, pq(-1).q) == (ZERO, ONE)
    assert (pq(1).p, pq(1).q) == (3, 2 * X + 1)
    assert (pq(2).p, pq(2).q) == (8 * X + 7, 4 * X**2 + 10 * X + 1)
    assert pq(3).p == 20 * X**2 + 70 * X + 15


def test_sequences():
    assert [a_seq(n) for n in range(8)] == [1, 2, 4, 10, 32, 126, 588, 3170]
    assert [b_seq(n) for n in range(8)] == [1, 2, 4, 10, 32, 126, 588, 3170]


def test_recursions():
    assert a_recursion_holds(0) and a_recursion_holds(1)
    assert b_recursion_holds(0) and b_recursion_holds(1)
    assert ab_recursion_check(25)
    assert stephan_check(0) and stephan_check(3) and stephan_check(30)


def test_ode():
    assert a_ode_residual(20).coeffs == (0,) * 20


def test_zeta_values():
    z0, z1 = zeta_cb_neg(0), zeta_cb_neg(1)
    assert (z0.u, z0.v) == (F(1, 3), F(2, 9))
    assert (z1.u, z1.v) == (F(2, 3), F(2, 9))
    assert str(z0) == "1/3 + 2/9*pi/sqrt(3)"
    assert str(z0.to_decimal(12)).startswith("0.736399858")


def test_zeta_partial_sum():
    s, tail = zeta_cb_partial(0, 200)
    assert tail < F(1, 10**12)
    assert zeta_cb_residual(0, 200) < F(1, 10**12)
    assert all(zeta_cb_residual(k) < 1e-10 for k in range(9))


def test_polynomial_identities():
    assert q_eulerian_check(0) and q_eulerian_check(1)
    assert p_explicit_check(0) and p_explicit_check(1)
    assert all(q_eulerian_check(n) and p_explicit_check(n) for n in range(16))


@pytest.mark.parametrize("k,order", [(-1, 12), (0, 12), (5, 14)])
def test_lehmer_series(k, order):
    assert lehmer_series_check(k, order)


def test_F_values():
    assert Fj(0, F(3), F(7)) == 1
    assert Fj(1, 5, 5) == F(1, 25)
    assert Fj(2, 5, 5) == F(1, 225)


def test_trans():
    assert trans_sides(0, F(7, 2), F(5, 2)) == (F(15, 4), F(15, 4))
    assert trans_sides(1, F(7, 2), F(5, 2))[1] == 0
    assert all(trans_check(j, F(9, 2), F(7, 2)) for j in range(21))


@given(st.integers(0, 12), st.fractions(min_value=F(1, 3), max_value=9, max_denominator=6),
       st.fractions(min_value=F(1, 3), max_value=9, max_denominator=6))
def test_trans_property(j, x, y):
    try:
        assert trans_check(j, x, y)
    except PoleError:
        pass


@pytest.mark.parametrize("x", [F(-1, 3), F(-1, 2), F(-1)])
def test_key_equality(x):
    r = key_equality(x, 200, F(1, 10**10))
    assert r.ok
    assert r.difference.lo <= 0 <= r.difference.hi
    assert key_equality_check(x)


def test_key_equality_naive_sum_is_not_enough_at_minus_one():
    r = key_equality(F(-1), 200)
    assert abs(r.naive_difference) > F(1, 10**10)
    assert r.ok


def test_key_equality_pole():
    with pytest.raises(PoleError, match="pole of F_j"):
        key_equality(F(1, 5))


def test_bn_ogf():
    assert bn_ogf_series(5, 1)[0] == 1
    assert bn_ogf_series(5, 3)[2] == 4
    assert bn_ogf_check(20, 10)
    assert bn_ogf_check(20)
