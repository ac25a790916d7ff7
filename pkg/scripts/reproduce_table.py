"""Print the poly-Euler grid for both kinds, one column per computation route.

    python3 scripts/reproduce_table.py --max-n 6 --max-k 4
"""

import argparse
from dataclasses import dataclass

from polyseq.polyeuler import methods_for, pe_value


@dataclass
class TableConfig:
    max_n: int = 4
    max_k: int = 3


def main(cfg: TableConfig) -> int:
    disagreements = 0
    for kind in ("first", "second"):
        methods = methods_for(kind)
        print(f"\n{kind} kind  ({', '.join(methods)})")
        for n in range(cfg.max_n + 1):
            cells = []
            for k in range(cfg.max_k + 1):
                vals = [pe_value(kind, n, k, m) for m in methods]
                if len(set(vals)) > 1:
                    disagreements += 1
                    cells.append("/".join(map(str, vals)))
                else:
                    cells.append(str(vals[0]))
            print(f"n={n}: " + "  ".join(f"{c:>10}" for c in cells))
    print(f"\n{disagreements} cells where routes disagree")
    return 1 if disagreements else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--max-k", type=int, default=3)
    a = ap.parse_args()
    raise SystemExit(main(TableConfig(a.max_n, a.max_k)))
