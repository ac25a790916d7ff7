"""Acceptance criteria, one test each.

Every test appends a ``[PASS]``/``[FAIL]`` line to ``RESULTS``.  The lines are
printed in pytest's terminal summary (see conftest) and when this file is run
directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import time
from fractions import Fraction as F
from math import comb, factorial

from polyseq import enumerate as en
from polyseq import eulerian as eu
from polyseq import polybernoulli as pb
from polyseq import polyeuler as pe
from polyseq import stephan as st
from polyseq import stirling as sti
from polyseq.checks import POLY_EULER_TABLE, SAMPLE_X
from polyseq.exact import X, poly_eval

RESULTS: list[str] = []


def record(num: int, label: str, ok: bool, elapsed: float, limit: float | None = None) -> None:
    within = limit is None or elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    budget = f" (limit {limit:g} s)" if limit is not None else ""
    RESULTS.append(f"[{status}] criterion {num}: {label}  {elapsed:.2f} s{budget}")
    assert ok, label
    assert within, f"{label}: {elapsed:.2f} s exceeds {limit} s"


def _timed(fn):
    t0 = time.perf_counter()
    ok = fn()
    return ok, time.perf_counter() - t0


def test_criterion_1_poly_euler_table():
    def run():
        for n in range(5):
            for k in range(4):
                want1, want2 = POLY_EULER_TABLE["first"][n][k], POLY_EULER_TABLE["second"][n][k]
                firsts = (pe.pe_incexc("first", n, k), pe.pe_closed_first(n, k), pe.pe_ohno_sasaki(n, k),
                          pe.pe_via_typeC("first", n, k), pe.pe_egf("first", n, k))
                seconds = (pe.pe_incexc("second", n, k), pe.pe_via_typeC("second", n, k), pe.pe_egf("second", n, k))
                if set(firsts) != {want1} or set(seconds) != {want2}:
                    return False
        return True

    ok, dt = _timed(run)
    record(1, "poly-Euler table, 40 values, every method", ok, dt, 1.0)


def test_criterion_2_oracles():
    def run():
        for n in range(5):
            for k in range(5):
                closed = pb.pb_poly_closed(n, k)
                forms = (closed, pb.pb_poly_sieve(n, k), pb.pb_poly_binomial(n, k))
                if len(set(forms)) != 1:
                    return False
                if en.enum_abundant_callan(n, k) != closed:
                    return False
                egf_at = lambda x: pb.pb_egf(n, -k, x)
                if en.enum_callan(n, k) != poly_eval(closed, 0) or en.enum_callan(n, k) != egf_at(0):
                    return False
                if en.enum_typeC(n, k) != poly_eval(closed, -1) or en.enum_typeC(n, k) != egf_at(-1):
                    return False
                for r in range(1, 4):
                    count = en.enum_extended_callan(n, k, r)
                    if count != poly_eval(closed, r) or count != egf_at(r):
                        return False
        for n in range(4):
            for k in range(4):
                if en.enum_esequences(n, k, "odd") != pe.pe_incexc("first", n, k):
                    return False
                if en.enum_esequences(n, k, "even") != pe.pe_incexc("second", n, k):
                    return False
        return True

    ok, dt = _timed(run)
    record(2, "exhaustive oracles match formulas (n, k <= 4, r <= 3; E-sequences n, k <= 3)", ok, dt, 30.0)


def test_criterion_3_stephan():
    def run():
        st.pq.cache_clear()
        return (st.stephan_check(30)
                and all(st.a_recursion_holds(n) and st.b_recursion_holds(n) for n in range(30))
                and all(c == 0 for c in st.a_ode_residual(31).coeffs))

    ok, dt = _timed(run)
    record(3, "a_n = b_n for n <= 30, both recursions, ODE", ok, dt, 5.0)


def test_criterion_4_worked_examples():
    def run():
        return (sti.stirling1_weighted(3, 1) == 3 * X**2 + 6 * X + 2
                and eu.eulerian_rec(2, 2) == 4 * X**2 + 7 * X + 1
                and eu.eulerian_number(3, 2) == 4
                and all(pe.pe_incexc("first", 2, k) == 4 * (2 ** (k + 1) - 1) for k in range(7))
                and all(pe.pe_incexc("first", n, 0) == (3**n - 1) // 2 for n in range(13))
                and all(pe.pe_incexc("second", n, 0) == (3**n + 1) // 2 for n in range(13)))

    ok, dt = _timed(run)
    record(4, "worked examples", ok, dt)


def test_criterion_5_generating_functions():
    order = 14

    def run():
        for n in range(9):
            for k in range(9):
                p = pb.pb_poly_closed(n, k)
                if any(pb.pb_egf(n, -k, x, order) != poly_eval(p, x) for x in SAMPLE_X):
                    return False
        for kind in ("first", "second"):
            for n in range(9):
                for k in range(4):
                    if pe.pe_egf(kind, n, k, order) != pe.pe_incexc(kind, n, k):
                        return False
        xs = [F(1, 2), F(1, 3), F(-1), F(2), F(-2, 5)]
        for r in (0, 1, 2, 3, F(1, 2)):
            for x0 in xs:
                s = eu.eulerian_egf_series(r, x0, order)
                if any(s[n] * factorial(n) != poly_eval(eu.eulerian_rec(n, r), x0) for n in range(11)):
                    return False
        return True

    ok, dt = _timed(run)
    record(5, "EGF coefficients at order 14 (poly-Bernoulli, poly-Euler, r-Eulerian)", ok, dt)


def test_criterion_6_poly_bernoulli_identities():
    def run():
        R = range(6)
        if any(pb.c_sym(n, k, r, s, "A") != pb.c_sym(n, k, r, s, "B")
               or pb.c_sym(n, k, r, s, "A") != pb.c_sym(k, n, s, r, "A")
               for n in R for k in R for r in R for s in R):
            return False
        grid = SAMPLE_X[:6]
        for n in range(9):
            for k in range(6):
                if not all(pb.ber_hypersum_check(n, k, x, y) for x in grid for y in grid):
                    return False
                if not pb.power_sum_corollary_check(n, k):
                    return False
                for m in range(5):
                    for r in range(5 - m):
                        if m + r and not pb.hypersum_corollary_check(n, k, m, r):
                            return False
        return True

    ok, dt = _timed(run)
    record(6, "symmetric formula, Stirling convolution, hypersum corollaries", ok, dt)


def test_criterion_7_poly_euler_identities():
    def run():
        for n in range(9):
            for k in range(9):
                if not (pe.difference_check(n, k) and pe.bernoulli_convolution_check(n, k)):
                    return False
                # type-C convolution with the closed E0 values
                c = [pb.pb_typeC(j, k) for j in range(n + 1)]
                t1 = sum(comb(n, l) * F(3**l - 1, 2) * c[n - l] * 4 ** (n - l) for l in range(n + 1))
                t2 = sum(comb(n, l) * F(3**l + 1, 2) * c[n - l] * 4 ** (n - l) for l in range(n + 1))
                if (t1, t2) != (pe.pe_incexc("first", n, k), pe.pe_incexc("second", n, k)):
                    return False
            if not (pe.k_one_check("first", n) and pe.k_one_check("second", n)):
                return False
        return True

    ok, dt = _timed(run)
    record(7, "difference, 4^n B convolution, k = 1 and type-C corollaries", ok, dt)


def test_criterion_8_central_binomial_chain():
    pairs = [(F(9, 2), F(7, 2)), (F(7, 2), F(5, 2)), (F(11, 3), F(5, 2)), (F(-1, 2), F(1, 3)), (F(17, 5), F(-7, 4))]

    def run():
        return (all(st.q_eulerian_check(n) and st.p_explicit_check(n) for n in range(16))
                and all(st.lehmer_series_check(k, 14) for k in range(-1, 6))
                and all(st.trans_check(j, x, y) for j in range(21) for x, y in pairs)
                and all(st.key_equality_check(x, 200, F(1, 10**10)) for x in (F(-1, 3), F(-1, 2), F(-1)))
                and st.bn_ogf_check(20)
                and all(st.zeta_cb_residual(k, 200) < 1e-10 for k in range(9)))

    ok, dt = _timed(run)
    record(8, "Lehmer polynomials, series identity, F_j transformation, key equality, b_n OGF, zeta values", ok, dt)


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(RESULTS))
    raise SystemExit(0 if all(line.startswith("[PASS]") for line in RESULTS) else 1)
