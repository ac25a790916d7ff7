"""Vendored OEIS fixtures (b-file format) used for offline cross-checks."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

FIXTURES = ("A003462", "A007051", "A028296", "A098830")


@lru_cache(maxsize=None)
def load(anum: str) -> tuple[int, ...]:
    if anum not in FIXTURES:
        raise KeyError(f"no vendored fixture for {anum}")
    text = resources.files("polyseq").joinpath("data", f"{anum}.txt").read_text()
    vals = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n, v = line.split()
        if int(n) != len(vals):
            raise ValueError(f"{anum}: non-contiguous index {n}")
        vals.append(int(v))
    return tuple(vals)
