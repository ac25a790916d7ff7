"""Check a_n = b_n well past the acceptance bound and report timing.

a_n comes from the Lehmer polynomials at x = 1/4, b_n from antidiagonal sums
of poly-Bernoulli numbers; the two computations share no code.
"""

import argparse
import time
from dataclasses import dataclass

from polyseq.oeis import load
from polyseq.stephan import a_seq, b_seq


@dataclass
class SweepConfig:
    max_n: int = 60
    every: int = 10


def main(cfg: SweepConfig) -> int:
    fixture = load("A098830")
    t0 = time.perf_counter()
    bad = []
    for n in range(cfg.max_n + 1):
        a, b = a_seq(n), b_seq(n)
        if a != b or (n < len(fixture) and b != fixture[n]):
            bad.append(n)
        if n % cfg.every == 0:
            print(f"n={n:>3}  b_n has {len(str(b)):>3} digits  {time.perf_counter() - t0:6.2f} s")
    print("mismatches:", bad or "none")
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=60)
    ap.add_argument("--every", type=int, default=10)
    a = ap.parse_args()
    raise SystemExit(main(SweepConfig(a.max_n, a.every)))
