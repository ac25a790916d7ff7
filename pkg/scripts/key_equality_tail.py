"""Compare the naive truncated difference with the rigorous enclosure.

At x = -1 the hypergeometric terms decay only like j^-6, so 200 terms leave
an error around 1e-7; the enclosure accounts for the tail exactly.  Further
from zero convergence slows: x = -3 needs about J = 1000 to fit inside 1e-10.

    python3 scripts/key_equality_tail.py --J 1000 -- -3
"""

import argparse
from dataclasses import dataclass, field
from fractions import Fraction

from polyseq.stephan import key_equality


@dataclass
class TailConfig:
    xs: list = field(default_factory=lambda: ["-1/3", "-1/2", "-1"])
    J: int = 200
    tol: Fraction = Fraction(1, 10**10)


def main(cfg: TailConfig) -> int:
    ok = True
    for s in cfg.xs:
        r = key_equality(Fraction(s), cfg.J, cfg.tol)
        ok &= r.ok
        print(f"x={s:>5}  naive {float(r.naive_difference):+.3e}  "
              f"enclosure [{float(r.difference.lo):+.3e}, {float(r.difference.hi):+.3e}]  ok={r.ok}")
    return 0 if ok else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--J", type=int, default=200)
    ap.add_argument("xs", nargs="*", default=None)
    a = ap.parse_args()
    cfg = TailConfig(J=a.J)
    if a.xs:
        cfg.xs = a.xs
    raise SystemExit(main(cfg))
