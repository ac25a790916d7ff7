"""Identity suites behind ``polyseq verify``.

Each suite returns one :class:`ReportRecord` per identity.  A record fails on
the first counterexample and reports it in ``inputs`` / ``expected`` /
``actual``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable

from polyseq import enumerate as oracle
from polyseq import eulerian as eu
from polyseq import polybernoulli as pb
from polyseq import polyeuler as pe
from polyseq import stephan as st
from polyseq import stirling as sti
from polyseq.anchors import anchor
from polyseq.exact import X, pochhammer, poly_eval, poly_sum
from polyseq.oeis import load
from polyseq.series import TruncSeries, egf_coeff, exp_linear, one_minus_exp_neg, polylog_pos, ser_div

# Reported values: first kind (left) and second kind (right), rows n = 0..4, columns k = 0..3.
POLY_EULER_TABLE = {
    "first": [
        [0, 0, 0, 0],
        [1, 1, 1, 1],
        [4, 12, 28, 60],
        [13, 109, 493, 1837],
        [40, 888, 7192, 42840],
    ],
    "second": [
        [1, 1, 1, 1],
        [2, 6, 14, 30],
        [5, 37, 165, 613],
        [14, 234, 1826, 10770],
        [41, 1513, 19689, 175465],
    ],
}

SAMPLE_X = [Fraction(p, q) for p, q in [
    (0, 1), (1, 1), (-1, 1), (2, 1), (-3, 1), (1, 2), (-1, 2), (1, 3), (-2, 3), (5, 4),
    (-7, 5), (3, 7), (11, 6), (-13, 9), (1, 10), (17, 3), (-5, 8), (9, 11), (4, 13), (-19, 7),
]]

SUITES = ("stirling", "polybernoulli", "polyeuler", "eulerian", "stephan", "oracles")


@dataclass
class VerifyConfig:
    max_n: int = 8
    max_k: int = 5
    stephan_n: int = 30
    enum_bound: int = 6
    series_order: int = 14


@dataclass
class ReportRecord:
    check: str
    anchor: str
    inputs: dict = field(default_factory=dict)
    expected: str = ""
    actual: str = ""
    status: str = "pass"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return asdict(self)


def _s(v) -> str:
    return str(v)


def run_cases(name: str, key: str, cases: Iterable[tuple[dict, Callable[[], tuple]]], scope: str = "") -> ReportRecord:
    """Each case yields (inputs, thunk) with thunk() -> (expected, actual)."""
    count = 0
    for inputs, thunk in cases:
        expected, actual = thunk()
        count += 1
        if expected != actual:
            return ReportRecord(name, anchor(key), inputs, _s(expected), _s(actual), "fail")
    return ReportRecord(name, anchor(key), {"scope": scope, "cases": count}, "", "", "pass")


def _grid(max_n: int, max_k: int):
    return [(n, k) for n in range(max_n + 1) for k in range(max_k + 1)]


# suites


def suite_stirling(cfg: VerifyConfig) -> list[ReportRecord]:
    N = min(cfg.max_n, 10)
    out = []
    out.append(run_cases(
        "[n+1 m]_x = (x+m)[n m]_x + [n m-1]_x", "s2-recursion",
        (({"n": n, "m": m}, lambda n=n, m=m: (
            (X + m) * sti.stirling2_weighted(n, m) + (sti.stirling2_weighted(n, m - 1) if m else 0),
            sti.stirling2_weighted(n + 1, m)))
         for n in range(N) for m in range(n + 2)), f"n < {N}"))
    out.append(run_cases(
        "[n m]_{x+1} = (m+1)[n m+1]_x + [n m]_x", "s2-shift",
        (({"n": n, "m": m}, lambda n=n, m=m: (
            (m + 1) * sti.stirling2_weighted(n, m + 1) + sti.stirling2_weighted(n, m),
            sti.stirling2_weighted(n, m).shift(1)))
         for n in range(N + 1) for m in range(n + 1)), f"n, m <= {N}"))
    out.append(run_cases(
        "[n m]_0 = {n m}, [n m]_1 = {n+1 m+1}", "s2-specializations",
        (({"n": n, "m": m}, lambda n=n, m=m: (
            (sti.stirling2(n, m), sti.stirling2(n + 1, m + 1)),
            (poly_eval(sti.stirling2_weighted(n, m), 0), poly_eval(sti.stirling2_weighted(n, m), 1))))
         for n in range(N + 1) for m in range(n + 1)), f"n <= {N}"))
    out.append(run_cases(
        "(x+y)_n = sum_m stf{n}{m}_y x^m", "s1-pochhammer",
        (({"n": n, "y": str(y)}, lambda n=n, y=y: (
            pochhammer(X + y, n),
            poly_sum(poly_eval(sti.stirling1_weighted(n, m), y) * X**m for m in range(n + 1))))
         for n in range(N + 1) for y in SAMPLE_X[: n + 2]), f"n <= {N}, n+2 rational y"))
    out.append(run_cases(
        "stf{n}{m}_1 = [n+1, m+1]", "s1-at-one",
        (({"n": n, "m": m}, lambda n=n, m=m: (
            sti.stirling1(n + 1, m + 1), poly_eval(sti.stirling1_weighted(n, m), 1)))
         for n in range(N + 1) for m in range(n + 1)), f"n <= {N}"))

    def rst(n, m, r):
        order = n + 1
        e = exp_linear(1, order)
        g = exp_linear(r, order) * (e - 1) ** m / factorial(m)
        return egf_coeff(g, n)

    out.append(run_cases(
        "r-Stirling numbers from their generating function", "rstirling-egf",
        (({"n": n, "m": m, "r": r}, lambda n=n, m=m, r=r: (rst(n, m, r), sti.rstirling2(n, m, r)))
         for n in range(N + 1) for m in range(n + 1) for r in range(4)), f"n <= {N}, r <= 3"))
    return out


def suite_polybernoulli(cfg: VerifyConfig) -> list[ReportRecord]:
    N, K = cfg.max_n, cfg.max_k
    out = []
    out.append(run_cases(
        "closed = sieve = binomial", "pb-cross-method",
        (({"n": n, "k": k}, lambda n=n, k=k: (
            (pb.pb_poly_closed(n, k),) * 2, (pb.pb_poly_sieve(n, k), pb.pb_poly_binomial(n, k))))
         for n, k in _grid(N, K)), f"n <= {N}, k <= {K}"))
    out.append(run_cases(
        "EGF coefficients = closed form at rational x", "pb-egf",
        (({"n": n, "k": k}, lambda n=n, k=k: (
            [poly_eval(pb.pb_poly_closed(n, k), x) for x in SAMPLE_X],
            [pb.pb_egf(n, -k, x) for x in SAMPLE_X]))
         for n, k in _grid(min(N, 8), min(K, 8))), "20 rational x"))
    out.append(run_cases(
        "B_n^(-k) = B_k^(-n)", "pb-symmetry",
        (({"n": n, "k": k}, lambda n=n, k=k: (pb.pb_number(n, k), pb.pb_number(k, n)))
         for n, k in _grid(N, N)), f"n, k <= {N}"))

    def shape(n, k):
        p = pb.pb_poly_closed(n, k)
        ok = p.degree == n and p.leading == 1 and all(c >= 0 and c.denominator == 1 for c in p.coeffs)
        return True, ok

    out.append(run_cases(
        "monic, degree n, nonnegative integer coefficients", "pb-shape",
        (({"n": n, "k": k}, lambda n=n, k=k: shape(n, k)) for n, k in _grid(N, K)), f"n <= {N}, k <= {K}"))
    out.append(run_cases(
        "(-1)^n B_n^(1)(-x) is the Bernoulli polynomial", "classical-bernoulli",
        (({"n": n}, lambda n=n: (
            [_bernoulli_poly(n, x) for x in SAMPLE_X[:6]],
            [(-1) ** n * pb.pb_egf(n, 1, -x) for x in SAMPLE_X[:6]]))
         for n in range(N + 1)), f"n <= {N}"))
    R = min(N, 5)
    out.append(run_cases(
        "C_n^(-k)(r,s): binomial form = Stirling form, symmetric in (n,r) <-> (k,s)", "c-sym",
        (({"n": n, "k": k, "r": r, "s": s}, lambda n=n, k=k, r=r, s=s: (
            (pb.c_sym(n, k, r, s, "A"),) * 2, (pb.c_sym(n, k, r, s, "B"), pb.c_sym(k, n, s, r, "A"))))
         for n in range(R + 1) for k in range(R + 1) for r in range(R + 1) for s in range(R + 1)),
        f"n, k, r, s <= {R}"))
    HK = min(K, 5)
    out.append(run_cases(
        "sum_j stf{n}{j}_y B_j(x) = sum_l C(n,l)(x+y)_{n-l} l!(l+1)^k", "ber-hypersum",
        (({"n": n, "k": k, "x": str(x), "y": str(y)}, lambda n=n, k=k, x=x, y=y: pb.ber_hypersum_sides(n, k, x, y))
         for n in range(N + 1) for k in range(HK + 1)
         for x in SAMPLE_X[: n + 2] for y in SAMPLE_X[1: n + 3]), f"n <= {N}, k <= {HK}, (n+2)^2 grid"))
    out.append(run_cases(
        "sum_j stf{n}{j}_r B_j(m) = n! S_k^(m+r-1)(n+1)", "hypersum-corollary",
        (({"n": n, "k": k, "m": m, "r": r}, lambda n=n, k=k, m=m, r=r: (True, pb.hypersum_corollary_check(n, k, m, r)))
         for n in range(N + 1) for k in range(HK + 1)
         for m in range(5) for r in range(5) if 0 < m + r <= 4), f"n <= {N}, k <= {HK}, m+r <= 4"))
    out.append(run_cases(
        "sum_j [n+1, j+1] B_j = n! S_k(n+1)", "power-sum-corollary",
        (({"n": n, "k": k}, lambda n=n, k=k: (True, pb.power_sum_corollary_check(n, k)))
         for n in range(N + 1) for k in range(HK + 1)), f"n <= {N}, k <= {HK}"))
    return out


def _bernoulli_poly(n: int, x) -> Fraction:
    """Classical Bernoulli polynomial B_n(x) from t e^{xt}/(e^t - 1)."""
    order = n + 2
    t = TruncSeries.var(order)
    g = ser_div(t, exp_linear(1, order) - 1) * exp_linear(x, order - 1)
    return egf_coeff(g, n)


def suite_polyeuler(cfg: VerifyConfig) -> list[ReportRecord]:
    N, K = cfg.max_n, cfg.max_k
    out = []
    table_cases = []
    for kind, rows in POLY_EULER_TABLE.items():
        for n, row in enumerate(rows):
            for k, val in enumerate(row):
                table_cases.append(({"kind": kind, "n": n, "k": k}, lambda kind=kind, n=n, k=k, val=val: (
                    [val] * len(pe.methods_for(kind)), [pe.pe_value(kind, n, k, m) for m in pe.methods_for(kind)])))
    out.append(run_cases("every method reproduces the reported table", "pe-table", table_cases, "n <= 4, k <= 3"))
    out.append(run_cases(
        "all poly-Euler formulas agree", "pe-cross-method",
        (({"kind": kind, "n": n, "k": k}, lambda kind=kind, n=n, k=k: (
            [pe.pe_incexc(kind, n, k)] * len(pe.methods_for(kind)),
            [pe.pe_value(kind, n, k, m) for m in pe.methods_for(kind)]))
         for kind in ("first", "second") for n, k in _grid(N, K)), f"n <= {N}, k <= {K}"))
    out.append(run_cases(
        "values are positive integers (n >= 1 for the first kind)", "pe-positive",
        (({"kind": kind, "n": n, "k": k}, lambda kind=kind, n=n, k=k: (True, pe.pe_incexc(kind, n, k) > 0))
         for kind in ("first", "second") for n, k in _grid(N, K) if n or kind == "second"), f"n <= {N}, k <= {K}"))
    out.append(run_cases(
        "E~_n^(0) = (3^n-1)/2, E^_n^(0) = (3^n+1)/2", "pe-e0",
        (({"n": n}, lambda n=n: (
            ((3**n - 1) // 2, (3**n + 1) // 2), (pe.pe_incexc("first", n, 0), pe.pe_incexc("second", n, 0))))
         for n in range(max(N, 12) + 1)), "n <= 12"))
    out.append(run_cases(
        "E~_2^(-k) = 4(2^(k+1) - 1)", "pe-n2",
        (({"k": k}, lambda k=k: (4 * (2 ** (k + 1) - 1), pe.pe_incexc("first", 2, k))) for k in range(max(K, 6) + 1)),
        "k <= 6"))
    out.append(run_cases(
        "E^_n - E~_n = sum C(n,l) C_{n-l} 4^(n-l)", "pe-difference",
        (({"n": n, "k": k}, lambda n=n, k=k: (True, pe.difference_check(n, k))) for n, k in _grid(N, N)),
        f"n, k <= {N}"))
    out.append(run_cases(
        "4^n B_n = sum C(n,m)(E~_m + E^_m)", "pe-bernoulli",
        (({"n": n, "k": k}, lambda n=n, k=k: (True, pe.bernoulli_convolution_check(n, k))) for n, k in _grid(N, N)),
        f"n, k <= {N}"))
    out.append(run_cases(
        "k = 1 convolution, both kinds", "pe-k1",
        (({"kind": kind, "n": n}, lambda kind=kind, n=n: (True, pe.k_one_check(kind, n)))
         for kind in ("first", "second") for n in range(max(N, 10) + 1)), "n <= 10"))
    out.append(_oeis_record("A003462", lambda n: pe.pe_incexc("first", n, 0)))
    out.append(_oeis_record("A007051", lambda n: pe.pe_incexc("second", n, 0)))

    def secant(n):
        order = 2 * n + 3
        t = TruncSeries.var(order)
        g = ser_div(polylog_pos(1, one_minus_exp_neg(4, order)), 2 * t * (exp_linear(1, order) + exp_linear(-1, order)))
        return egf_coeff(g, 2 * n)

    out.append(_oeis_record("A028296", secant, key="euler-secant"))
    return out


def _oeis_record(anum: str, fn, key: str = "oeis") -> ReportRecord:
    vals = load(anum)
    return run_cases(
        f"{anum} fixture", key,
        (({"anum": anum, "n": n}, lambda n=n, v=v: (v, fn(n))) for n, v in enumerate(vals)),
        f"{len(vals)} terms")


def suite_eulerian(cfg: VerifyConfig) -> list[ReportRecord]:
    N = max(cfg.max_n, 10)
    rs = [Fraction(r) for r in (0, 1, 2, 3)] + [Fraction(1, 2), Fraction(3, 2), Fraction(-1, 2)]
    out = []
    out.append(run_cases(
        "explicit formula = recursion", "eu-explicit-rec",
        (({"n": n, "r": str(r)}, lambda n=n, r=r: (eu.eulerian_rec(n, r), eu.eulerian_explicit(n, r)))
         for n in range(N + 1) for r in rs), f"n <= {N}, r in {{0,1,2,3,1/2,3/2,-1/2}}"))
    xs = [Fraction(1, 2), Fraction(1, 3), Fraction(2)]
    order = cfg.series_order
    egf_n = min(N, order - 1)

    def egf_case(r, x0):
        s = eu.eulerian_egf_series(r, x0, order)
        return ([poly_eval(eu.eulerian_rec(n, r), x0) for n in range(egf_n + 1)],
                [egf_coeff(s, n) for n in range(egf_n + 1)])

    out.append(run_cases(
        "EGF coefficients = recursion values", "eu-egf",
        (({"r": str(r), "x0": str(x0)}, lambda r=r, x0=x0: egf_case(r, x0))
         for r in [Fraction(0), Fraction(1), Fraction(2), Fraction(3), Fraction(1, 2)] for x0 in xs),
        f"n <= {egf_n}, order {order}"))
    out.append(run_cases(
        "E_n^r(1) = (n+r)!/r!", "eu-row-sum",
        (({"n": n, "r": r}, lambda n=n, r=r: (factorial(n + r) // factorial(r), poly_eval(eu.eulerian_rec(n, r), 1)))
         for n in range(N + 1) for r in range(4)), f"n <= {N}, r <= 3"))
    out.append(run_cases(
        "A(n, k) by counting descents", "eu-eulerian-numbers",
        (({"n": n}, lambda n=n: (
            [sum((-1) ** j * comb(n + 1, j) * (k - j) ** n for j in range(k + 1)) for k in range(1, n + 1)],
            [eu.eulerian_number(n, k) for k in range(1, n + 1)]))
         for n in range(1, N + 1)), f"n <= {N}"))
    return out


def suite_stephan(cfg: VerifyConfig) -> list[ReportRecord]:
    N = cfg.stephan_n
    out = []
    out.append(run_cases(
        f"a_n = b_n, n <= {N}", "stephan",
        (({"n": n}, lambda n=n: (st.b_seq(n), st.a_seq(n))) for n in range(N + 1)), f"n <= {N}"))
    out.append(run_cases(
        "a_n integral", "a-integral",
        (({"n": n}, lambda n=n: (1, st.a_seq(n).denominator)) for n in range(N + 1)), f"n <= {N}"))
    out.append(run_cases(
        "a_n recursion", "a-recursion",
        (({"n": n}, lambda n=n: (True, st.a_recursion_holds(n))) for n in range(N)), f"n < {N}"))
    out.append(run_cases(
        "b_n recursion", "b-recursion",
        (({"n": n}, lambda n=n: (True, st.b_recursion_holds(n))) for n in range(N)), f"n < {N}"))
    out.append(run_cases(
        "ODE for the a_n generating function", "a-ode",
        [({"order": N}, lambda: ([0] * N, list(st.a_ode_residual(N).coeffs)))], f"order {N}"))
    M = max(cfg.max_n, 15)
    out.append(run_cases(
        "q_n = (2x)^n E_n^{1/2}(1/x)", "q-eulerian",
        (({"n": n}, lambda n=n: (True, st.q_eulerian_check(n))) for n in range(M + 1)), f"n <= {M}"))
    out.append(run_cases(
        "p_n explicit form", "p-explicit",
        (({"n": n}, lambda n=n: (True, st.p_explicit_check(n))) for n in range(M + 1)), f"n <= {M}"))
    out.append(run_cases(
        "q_n coefficients are nonnegative integers", "q-positive",
        (({"n": n}, lambda n=n: (True, all(c >= 0 and c.denominator == 1 for c in st.pq(n).q.coeffs)))
         for n in range(M + 1)), f"n <= {M}"))
    order = cfg.series_order
    out.append(run_cases(
        "Lehmer series identity", "lehmer-series",
        (({"k": k, "order": order}, lambda k=k: st.lehmer_series_sides(k, order)) for k in range(-1, 6)),
        f"-1 <= k <= 5, order {order}"))
    pairs = [(Fraction(9, 2), Fraction(7, 2)), (Fraction(7, 2), Fraction(5, 2)), (Fraction(11, 3), Fraction(5, 2)),
             (Fraction(-1, 2), Fraction(1, 3)), (Fraction(17, 5), Fraction(-7, 4))]
    out.append(run_cases(
        "F_j three-term transformation", "f-transform",
        (({"j": j, "x": str(x), "y": str(y)}, lambda j=j, x=x, y=y: st.trans_sides(j, x, y))
         for j in range(21) for x, y in pairs), "j <= 20, 5 rational pairs"))
    out.append(run_cases(
        "key equality (rigorous tail enclosure, tol 1e-10)", "key-equality",
        (({"x": str(x), "J": 200}, lambda x=x: (True, st.key_equality_check(x, 200, Fraction(1, 10**10))))
         for x in (Fraction(-1, 3), Fraction(-1, 2), Fraction(-1))), "x in {-1/3, -1/2, -1}"))
    out.append(run_cases(
        "b_n ordinary generating function", "bn-ogf",
        [({"N": 20}, lambda: (True, st.bn_ogf_check(20)))], "N = 20"))
    out.append(run_cases(
        "zeta_CB(-k) vs partial sums", "zeta-cb",
        (({"k": k}, lambda k=k: (True, _zeta_ok(k))) for k in range(9)), "k <= 8, 200 terms"))
    out.append(_oeis_record("A098830", st.b_seq))
    return out


def _zeta_ok(k: int) -> bool:
    _, tail = st.zeta_cb_partial(k, 200)
    res = st.zeta_cb_residual(k, 200)
    return float(res) < 1e-10 and res <= _dec(tail) + _dec(Fraction(1, 10**45))


def _dec(q: Fraction):
    from decimal import Decimal, localcontext

    with localcontext() as ctx:
        ctx.prec = 55
        return Decimal(q.numerator) / Decimal(q.denominator)


def suite_oracles(cfg: VerifyConfig) -> list[ReportRecord]:
    B = cfg.enum_bound
    nk = [(n, k) for n in range(B + 1) for k in range(B + 1) if n + k <= B]
    out = []
    out.append(run_cases(
        "Callan sequences", "oracle-callan",
        (({"n": n, "k": k}, lambda n=n, k=k: (pb.pb_number(n, k), oracle.enum_callan(n, k))) for n, k in nk),
        f"n + k <= {B}"))
    out.append(run_cases(
        "r-extended Callan sequences", "oracle-extended",
        (({"n": n, "k": k, "r": r}, lambda n=n, k=k, r=r: (
            poly_eval(pb.pb_poly_closed(n, k), r), oracle.enum_extended_callan(n, k, r)))
         for n, k in nk for r in range(1, 4) if n <= 4), f"n + k <= {B}, n <= 4, r <= 3"))
    out.append(run_cases(
        "abundant Callan sequences", "oracle-abundant",
        (({"n": n, "k": k}, lambda n=n, k=k: (pb.pb_poly_closed(n, k), oracle.enum_abundant_callan(n, k)))
         for n, k in nk), f"n + k <= {B}"))
    out.append(run_cases(
        "type-C Callan sequences", "oracle-typec",
        (({"n": n, "k": k}, lambda n=n, k=k: (pb.pb_typeC(n, k), oracle.enum_typeC(n, k))) for n, k in nk),
        f"n + k <= {B}"))
    eb = min(B, oracle.ESEQ_BOUND)
    enk = [(n, k) for n, k in nk if n + k <= eb]
    out.append(run_cases(
        "odd/even E-sequences", "oracle-eseq",
        (({"n": n, "k": k}, lambda n=n, k=k: (
            (pe.pe_incexc("first", n, k), pe.pe_incexc("second", n, k)),
            (oracle.enum_esequences(n, k, "odd"), oracle.enum_esequences(n, k, "even"))))
         for n, k in enk), f"n + k <= {eb}"))
    out.append(run_cases(
        "4^n (Callan count) = sum C(n,m)(odd + even E-sequences)", "oracle-eseq-total",
        (({"n": n, "k": k}, lambda n=n, k=k: (
            4**n * oracle.enum_callan(n, k),
            sum(comb(n, m) * (oracle.enum_esequences(m, k, "odd") + oracle.enum_esequences(m, k, "even"))
                for m in range(n + 1))))
         for n, k in enk), f"n + k <= {eb}"))
    rb = min(B + 1, oracle.RUNPERM_BOUND)
    out.append(run_cases(
        "ascending runs", "oracle-runperms",
        (({"n": n, "r": r}, lambda n=n, r=r: (eu.eulerian_rec(n, r), oracle.enum_runperms(n, r)))
         for n in range(rb + 1) for r in range(rb + 1 - n)), f"n + r <= {rb}"))
    sb = min(B, oracle.STIRLING_BOUND)
    out.append(run_cases(
        "dagger partitions", "oracle-s2",
        (({"n": n, "m": m}, lambda n=n, m=m: (sti.stirling2_weighted(n, m), oracle.enum_s2_weighted(n, m)))
         for n in range(sb + 1) for m in range(n + 1)), f"n <= {sb}"))
    out.append(run_cases(
        "cycle permutations", "oracle-s1",
        (({"n": n, "m": m}, lambda n=n, m=m: (sti.stirling1_weighted(n, m), oracle.enum_s1_weighted(n, m)))
         for n in range(min(sb, 6) + 1) for m in range(n + 1)), f"n <= {min(sb, 6)}"))
    out.append(run_cases(
        "substitution objects", "oracle-cs",
        (({"n": n, "k": k, "x": "2", "y": "3"}, lambda n=n, k=k: (
            pb.ber_hypersum_sides(n, k, 2, 3)[1], oracle.enum_cs(n, k, 2, 3)))
         for n in range(min(B, 4) + 1) for k in range(min(B, 2) + 1)), "n <= 4, k <= 2"))
    return out


SUITE_FUNCS = {
    "stirling": suite_stirling,
    "polybernoulli": suite_polybernoulli,
    "polyeuler": suite_polyeuler,
    "eulerian": suite_eulerian,
    "stephan": suite_stephan,
    "oracles": suite_oracles,
}


def run_suite(name: str, cfg: VerifyConfig) -> list[tuple[str, ReportRecord]]:
    return [(name, r) for r in SUITE_FUNCS[name](cfg)]


def run_suites(names: Iterable[str], cfg: VerifyConfig, jobs: int = 1) -> list[tuple[str, ReportRecord]]:
    names = list(names)
    if jobs > 1 and len(names) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(run_suite, names, [cfg] * len(names)))
    else:
        results = [run_suite(n, cfg) for n in names]
    flat = [item for res in results for item in res]
    return sorted(flat, key=lambda t: (t[0], t[1].check))
