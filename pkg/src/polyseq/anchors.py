"""Names of the identities the verification suites check.

Reports carry these strings so a failing record says which identity broke.
Keep every label here; nothing else in the package spells them out.
"""

ANCHORS = {
    # stirling
    "s2-recursion": "weighted Stirling polynomials (second kind): row recursion",
    "s2-shift": "weighted Stirling polynomials (second kind): shift x -> x+1",
    "s2-specializations": "weighted Stirling polynomials (second kind): values at x = 0, 1",
    "s1-pochhammer": "weighted Stirling polynomials (first kind): rising factorial expansion",
    "s1-at-one": "weighted Stirling polynomials (first kind): value at 1 is a cycle count",
    "rstirling-egf": "r-Stirling numbers: generating function e^{rt}(e^t-1)^m/m!",
    # poly-Bernoulli
    "pb-cross-method": "poly-Bernoulli polynomials: closed = sieve = binomial forms",
    "pb-egf": "poly-Bernoulli polynomials: generating-function definition",
    "pb-symmetry": "poly-Bernoulli numbers: B_n^(-k) = B_k^(-n)",
    "pb-shape": "poly-Bernoulli polynomials: monic, degree n, nonnegative integer coefficients",
    "classical-bernoulli": "poly-Bernoulli at k = 1: (-1)^n B_n^(1)(-x) = B_n(x)",
    "c-sym": "(r,s)-extended Callan sequences: symmetric Stirling form",
    "ber-hypersum": "poly-Bernoulli/first-kind Stirling convolution identity",
    "hypersum-corollary": "hypersum corollary: n! S_k^(m+r-1)(n+1)",
    "power-sum-corollary": "power-sum corollary: n! S_k(n+1)",
    # poly-Euler
    "pe-table": "poly-Euler table reproduced (n <= 4, k <= 3, both kinds)",
    "pe-cross-method": "poly-Euler numbers: all formulas agree",
    "pe-e0": "poly-Euler numbers at k = 0: (3^n -/+ 1)/2",
    "pe-n2": "poly-Euler numbers at n = 2: 4(2^(k+1) - 1)",
    "pe-difference": "poly-Euler numbers: second minus first kind via type-C numbers",
    "pe-bernoulli": "poly-Euler/poly-Bernoulli: 4^n B_n = binomial convolution of both kinds",
    "pe-k1": "poly-Euler numbers at k = 1: binomial convolution with 4^(n-l)",
    "pe-positive": "poly-Euler numbers are positive integers",
    "euler-secant": "classical Euler numbers from the k = 1 generating function",
    # Eulerian
    "eu-explicit-rec": "r-Eulerian polynomials: explicit formula = recursion",
    "eu-egf": "r-Eulerian polynomials: exponential generating function",
    "eu-row-sum": "r-Eulerian polynomials: value at 1 is (n+r)!/r!",
    "eu-eulerian-numbers": "r-Eulerian polynomials at r = 0 carry the Eulerian numbers",
    # central binomial series / Stephan
    "stephan": "Stephan's conjecture: a_n = b_n",
    "a-recursion": "a_n recursion 3a_{n+1} = 2a_n + sum C(n+1,k) a_k + 3",
    "b-recursion": "b_n recursion 3b_{n+1} = 2b_n + sum C(n+1,k) b_k + 3",
    "a-ode": "generating function of a_n: (4-e^t)A' - (2+e^t)A = 3e^t",
    "a-integral": "a_n are integers",
    "q-eulerian": "q_n(x) = (2x)^n E_n^{1/2}(1/x)",
    "p-explicit": "p_n = 2^n E_n^0 + sum C(n,k) q_{n-k} q_{k-2}",
    "q-positive": "q_n has nonnegative integer coefficients",
    "lehmer-series": "Lehmer's central binomial series identity",
    "f-transform": "three-term F_j transformation",
    "key-equality": "hypergeometric form of the b_n recursion",
    "bn-ogf": "ordinary generating function of b_n",
    "zeta-cb": "central binomial series at non-positive integers",
    # oracles
    "oracle-callan": "Callan sequences counted by B_n^(-k)",
    "oracle-extended": "r-extended Callan sequences counted by B_n^(-k)(r)",
    "oracle-abundant": "abundant Callan sequences generate B_n^(-k)(x)",
    "oracle-typec": "Callan sequences with singleton extra red block counted by C_n^(-k)",
    "oracle-eseq": "odd/even E-sequences counted by poly-Euler numbers",
    "oracle-eseq-total": "decorated Callan sequences split into E-sequences",
    "oracle-runperms": "multiset permutations weighted by runs give r-Eulerian polynomials",
    "oracle-s2": "partitions with dagger block give weighted Stirling polynomials (second kind)",
    "oracle-s1": "cycle permutations with LR-minima give weighted Stirling polynomials (first kind)",
    "oracle-cs": "substitution objects realize the poly-Bernoulli/Stirling convolution",
    # OEIS fixtures
    "oeis": "vendored OEIS fixture agrees",
}


def anchor(key: str) -> str:
    return ANCHORS[key]
