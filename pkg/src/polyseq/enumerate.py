"""Exhaustive generators for the combinatorial models.

These are the ground-truth oracles: every count here comes from listing
objects, never from a formula.  Sizes are capped by ``bound`` arguments so an
accidental large call fails fast instead of running for hours.

Notation used by :func:`render`: blue elements carry a ``b`` prefix, red
elements an ``r`` prefix, stars are ``*``, a red block split into left/right
parts shows the split with ``/``, and the unpaired red block follows ``|``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Iterator, Optional, Sequence

from sympy.utilities.iterables import multiset_permutations

from polyseq.exact import Poly, as_rat

DEFAULT_BOUND = 10
ESEQ_BOUND = 7
RUNPERM_BOUND = 9
STIRLING_BOUND = 8
STAR = "*"


class EnumerationBoundError(ValueError):
    pass


def _bound(size: int, bound: int) -> None:
    if size > bound:
        raise EnumerationBoundError(f"enumeration bound exceeded: size {size} > {bound}")


# set partitions


def set_partitions(items: Sequence) -> Iterator[list[list]]:
    """All set partitions of ``items`` via restricted growth strings.

    Blocks come out ordered by their first element, so the block holding
    ``items[0]`` is always block 0.
    """
    n = len(items)
    if n == 0:
        yield []
        return
    rgs = [0] * n

    def rec(i: int, top: int):
        if i == n:
            blocks: list[list] = [[] for _ in range(top + 1)]
            for item, b in zip(items, rgs):
                blocks[b].append(item)
            yield blocks
            return
        for b in range(top + 2):
            rgs[i] = b
            yield from rec(i + 1, max(top, b))

    yield from rec(1, 0)


def _partitions_by_size(items: Sequence) -> dict[int, list[list[list]]]:
    out: dict[int, list[list[list]]] = {}
    for p in set_partitions(items):
        out.setdefault(len(p), []).append(p)
    return out


# Callan sequences and their variants


@dataclass(frozen=True)
class CallanSequence:
    """Ordered Callan pairs plus the extra pair (stars implicit).

    ``special`` holds the labeled special red blocks of an extended sequence;
    ``abundant`` the unpaired red block of an abundant one.
    """

    pairs: tuple[tuple[frozenset, frozenset], ...]
    extra_blue: frozenset
    extra_red: frozenset
    special: tuple[frozenset, ...] = ()
    abundant: Optional[frozenset] = None

    @property
    def ordinary_red_count(self) -> int:
        return sum(len(r) for _, r in self.pairs)


def iter_callan(reds: Sequence, blues: Sequence) -> Iterator[CallanSequence]:
    """Callan sequences on the given red and blue labels (stars are added)."""
    red_parts = list(set_partitions([STAR, *reds]))
    blue_parts = _partitions_by_size([STAR, *blues])
    for rp in red_parts:
        m = len(rp) - 1
        extra_red = frozenset(rp[0]) - {STAR}
        red_ord = [frozenset(b) for b in rp[1:]]
        for bp in blue_parts.get(m + 1, ()):
            extra_blue = frozenset(bp[0]) - {STAR}
            blue_ord = [frozenset(b) for b in bp[1:]]
            for bperm in permutations(blue_ord):
                for rperm in permutations(red_ord):
                    yield CallanSequence(tuple(zip(bperm, rperm)), extra_blue, extra_red)


def _labels(n: int) -> list[int]:
    return list(range(1, n + 1))


def enum_callan(n: int, k: int, bound: int = DEFAULT_BOUND) -> int:
    _bound(n + k, bound)
    return sum(1 for _ in iter_callan(_labels(n), _labels(k)))


def iter_extended_callan(n: int, k: int, r: int) -> Iterator[CallanSequence]:
    reds = _labels(n)
    for assign in product(range(r + 1), repeat=n):
        rest = [e for e, a in zip(reds, assign) if a == 0]
        special = tuple(frozenset(e for e, a in zip(reds, assign) if a == i) for i in range(1, r + 1))
        for c in iter_callan(rest, _labels(k)):
            yield CallanSequence(c.pairs, c.extra_blue, c.extra_red, special=special)


def is_extended_callan(c: CallanSequence, n: int, k: int, r: int) -> bool:
    """Membership test: blocks partition the labels, ordinary blocks are non-empty."""
    blues = [b for b, _ in c.pairs]
    reds = [rb for _, rb in c.pairs]
    if len(c.special) != r or any(not blk for blk in blues + reds):
        return False
    blue_all = blues + [c.extra_blue]
    red_all = reds + [c.extra_red, *c.special]
    if sum(map(len, blue_all)) != k or sum(map(len, red_all)) != n:
        return False
    return frozenset().union(*blue_all) == frozenset(_labels(k)) and frozenset().union(*red_all) == frozenset(_labels(n))


def enum_extended_callan(n: int, k: int, r: int, bound: int = DEFAULT_BOUND) -> int:
    _bound(n + k, bound)
    return sum(1 for _ in iter_extended_callan(n, k, r))


def iter_abundant_callan(n: int, k: int) -> Iterator[CallanSequence]:
    reds = _labels(n)
    for size in range(n + 1):
        for rbar in combinations(reds, size):
            rest = [e for e in reds if e not in rbar]
            for c in iter_callan(rest, _labels(k)):
                yield CallanSequence(c.pairs, c.extra_blue, c.extra_red, abundant=frozenset(rbar))


def enum_abundant_callan(n: int, k: int, bound: int = DEFAULT_BOUND) -> Poly:
    _bound(n + k, bound)
    counts = Counter(len(c.abundant) for c in iter_abundant_callan(n, k))
    return Poly(counts.get(i, 0) for i in range(n + 1))


def enum_typeC(n: int, k: int, bound: int = DEFAULT_BOUND) -> int:
    _bound(n + k, bound)
    return sum(1 for c in iter_callan(_labels(n), _labels(k)) if not c.extra_red)


# E-sequences


@dataclass(frozen=True)
class ESequence:
    """Abundant Callan sequence with signs on paired reds and left/right sides
    on reds of ordinary blocks."""

    base: CallanSequence
    signs: tuple[tuple[int, str], ...]
    sides: tuple[tuple[int, str], ...]

    @property
    def parity(self) -> str:
        return "odd" if len(self.base.abundant) % 2 else "even"


def _decoration_count(c: CallanSequence) -> int:
    signed = len(c.extra_red) + c.ordinary_red_count
    return 2**signed * 2**c.ordinary_red_count


def iter_esequences(n: int, k: int, parity: Optional[str] = None) -> Iterator[ESequence]:
    for c in iter_abundant_callan(n, k):
        p = "odd" if len(c.abundant) % 2 else "even"
        if parity is not None and p != parity:
            continue
        signed = sorted(c.extra_red) + sorted(e for _, r in c.pairs for e in r)
        sided = sorted(e for _, r in c.pairs for e in r)
        for sg in product("+-", repeat=len(signed)):
            for sd in product("LR", repeat=len(sided)):
                yield ESequence(c, tuple(zip(signed, sg)), tuple(zip(sided, sd)))


def enum_esequences(n: int, k: int, parity: str, bound: int = ESEQ_BOUND) -> int:
    """Count odd or even (n,k)-E-sequences; decorations are folded in as weights."""
    if parity not in ("odd", "even"):
        raise ValueError("parity must be 'odd' or 'even'")
    _bound(n + k, bound)
    want = 1 if parity == "odd" else 0
    return sum(_decoration_count(c) for c in iter_abundant_callan(n, k) if len(c.abundant) % 2 == want)


# permutations with ascending runs


def descents(word: Sequence[int]) -> int:
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


def iter_runperms(n: int, r: int) -> Iterator[list[int]]:
    return multiset_permutations([0] * r + _labels(n))


def enum_runperms(n: int, r: int, bound: int = RUNPERM_BOUND) -> Poly:
    """sum over words of [n] + 0^r of x^(ascending runs - 1)."""
    _bound(n + r, bound)
    counts = Counter(descents(w) for w in iter_runperms(n, r))
    return Poly(counts.get(i, 0) for i in range(max(counts) + 1))


# weighted Stirling objects


def enum_s2_weighted(n: int, m: int, bound: int = STIRLING_BOUND) -> Poly:
    """Partitions of {1..n} + {dagger} into m+1 blocks, weight |dagger block| - 1."""
    _bound(n, bound)
    counts = Counter(len(p[0]) - 1 for p in set_partitions([STAR, *_labels(n)]) if len(p) == m + 1)
    return Poly(counts.get(i, 0) for i in range(n + 1))


def canonical_cycles(perm: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Cycles of ``perm`` (as images of 0..n), each led by its minimum, sorted by leader."""
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        j = perm[start]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = perm[j]
        cycles.append(tuple(cyc))
    return tuple(cycles)


def lr_minima(word: Sequence[int]) -> int:
    count, low = 0, None
    for w in word:
        if low is None or w < low:
            count += 1
            low = w
    return count


def iter_cycle_perms(n: int, m: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Permutations of {0..n} with m+1 cycles, in canonical cycle notation."""
    for perm in permutations(range(n + 1)):
        cyc = canonical_cycles(perm)
        if len(cyc) == m + 1:
            yield cyc


def s1_weight(cycles: tuple[tuple[int, ...], ...]) -> int:
    return lr_minima(cycles[0][1:])


def enum_s1_weighted(n: int, m: int, bound: int = STIRLING_BOUND) -> Poly:
    _bound(n, bound)
    counts = Counter(s1_weight(c) for c in iter_cycle_perms(n, m))
    return Poly(counts.get(i, 0) for i in range(n + 1))


# substitution objects pairing an abundant Callan sequence with a permutation


@dataclass(frozen=True)
class CSObject:
    pairs: tuple[tuple[frozenset, frozenset], ...]
    extra_blue: frozenset
    extra_cycles: frozenset
    unpaired_cycles: frozenset


def iter_cs(n: int, k: int) -> Iterator[tuple[CSObject, int, int]]:
    """Yield (object, w_AC, w_S1): red i of the Callan sequence is replaced by
    cycle c_i, the red star by the cycle of 0, and the blue star dropped."""
    for j in range(n + 1):
        perms = list(iter_cycle_perms(n, j))
        calls = list(iter_abundant_callan(j, k))
        for cyc in perms:
            w1 = s1_weight(cyc)
            for c in calls:
                sub = lambda block: frozenset(cyc[i] for i in block)
                obj = CSObject(
                    tuple((b, sub(r)) for b, r in c.pairs),
                    c.extra_blue,
                    sub(c.extra_red) | {cyc[0]},
                    sub(c.abundant),
                )
                yield obj, len(c.abundant), w1


def enum_cs(n: int, k: int, x, y, bound_n: int = 5, bound_k: int = 3) -> Fraction:
    if n > bound_n or k > bound_k:
        raise EnumerationBoundError(f"enumeration bound exceeded: (n, k) = ({n}, {k})")
    x, y = as_rat(x), as_rat(y)
    return sum((x**wa * y**ws for _, wa, ws in iter_cs(n, k)), Fraction(0))


# rendering


def _fmt(prefix: str, items, star: bool = False) -> list[str]:
    out = [f"{prefix}{e}" for e in sorted(items)]
    if star:
        out.append(f"{prefix}*")
    return out


def render(obj) -> str:
    if isinstance(obj, ESequence):
        return _render_eseq(obj)
    c: CallanSequence = obj
    s = "".join(f"({','.join(_fmt('b', b) + _fmt('r', r))})" for b, r in c.pairs)
    s += f"({','.join(_fmt('b', c.extra_blue, True) + _fmt('r', c.extra_red, True))})"
    for blk in c.special:
        s += "|" + ",".join(_fmt("r", blk))
    if c.abundant is not None:
        s += "|" + ",".join(_fmt("r", c.abundant))
    return s


def _render_eseq(e: ESequence) -> str:
    signs = dict(e.signs)
    sides = dict(e.sides)
    c = e.base

    def red(el):
        return f"r{signs[el]}{el}"

    parts = []
    for b, r in c.pairs:
        left = [red(el) for el in sorted(r) if sides[el] == "L"]
        right = [red(el) for el in sorted(r) if sides[el] == "R"]
        parts.append(f"({','.join(_fmt('b', b) + left)}/{','.join(right)})")
    extra = _fmt("b", c.extra_blue, True) + [red(el) for el in sorted(c.extra_red)] + ["r*"]
    parts.append(f"({','.join(extra)})")
    return "".join(parts) + "|" + ",".join(_fmt("r", c.abundant))
