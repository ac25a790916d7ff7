"""``polyseq`` command line.

Exit status: 0 when everything requested passed, 1 when an identity failed,
2 on a usage error.  JSON and CSV never carry floats except in columns whose
name starts with ``approx``.

CSV columns are fixed per subcommand:

* table, poly: ``n,k,value`` (``k`` holds r for Eulerian rows, m for Stirling)
* verify: ``suite,check,anchor,status,inputs,expected,actual``
* zeta: ``k,u,v,exact,approx_value,approx_residual``
* stephan: ``n,a,b,equal``
* enumerate: ``index,object``
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from polyseq import enumerate as oracle
from polyseq import eulerian as eu
from polyseq import polybernoulli as pb
from polyseq import polyeuler as pe
from polyseq import stephan as st
from polyseq import stirling as sti
from polyseq.checks import SUITES, VerifyConfig, run_suites
from polyseq.exact import Poly, poly_eval

TABLE_FAMILIES = (
    "poly-bernoulli", "type-c", "poly-euler-1", "poly-euler-2",
    "eulerian", "stirling2", "stirling1", "stephan", "lehmer",
)
POLY_FAMILIES = ("poly-bernoulli", "eulerian", "stirling2", "stirling1", "lehmer-p", "lehmer-q")
ENUM_FAMILIES = ("callan", "extended", "abundant", "typec", "eseq-odd", "eseq-even", "runperm", "s2", "s1")


class UsageError(Exception):
    pass


def parse_rational(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {s!r}") from None


def render_rational(q) -> str:
    return str(Fraction(q))


def parse_range(s: str) -> tuple[int, int]:
    """``"A..B"`` or a single ``"A"``; both ends inclusive and nonnegative."""
    try:
        if ".." in s:
            a, b = s.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(s)
    except ValueError:
        raise UsageError(f"bad range {s!r}; expected A..B") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"invalid range {s!r}")
    return lo, hi


@dataclass
class CommandConfig:
    subcommand: str
    family: Optional[str] = None
    n: tuple[int, int] = (0, 4)
    k: tuple[int, int] = (0, 3)
    r: Fraction = Fraction(0)
    x: Optional[Fraction] = None
    fmt: str = "text"
    series_order: int = 14
    enum_bound: Optional[int] = None
    max_n: Optional[int] = None
    max_k: Optional[int] = None
    suite: str = "all"
    jobs: int = 1
    params: dict = field(default_factory=dict)


# keys whose integer values are indices or sizes, emitted as JSON numbers;
# every other number is a value and goes out as a "p/q" string
INDEX_KEYS = frozenset({
    "n", "k", "m", "r", "j", "J", "N", "index", "cases", "order",
    "max_n", "max_k", "stephan_n", "enum_bound", "series_order",
})


def _jsonable(v, key=None):
    if isinstance(v, bool) or v is None or isinstance(v, (str, float)):
        return v
    if isinstance(v, int) and key in INDEX_KEYS:
        return v
    if isinstance(v, (int, Fraction)):
        return render_rational(v)
    if isinstance(v, Poly):
        return v.render()
    if isinstance(v, dict):
        return {k: _jsonable(x, k) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x, key) for x in v]
    return str(v)


def emit(cfg: CommandConfig, family: str, records: list[dict], columns: list[str], out=None) -> None:
    out = out or sys.stdout
    if cfg.fmt == "json":
        doc = {"family": family, "params": _jsonable(cfg.params), "records": [_jsonable(r) for r in records]}
        json.dump(doc, out, indent=2)
        out.write("\n")
    elif cfg.fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(columns)
        for r in records:
            w.writerow([_csv_cell(r.get(c), c) for c in columns])
    else:
        for r in records:
            out.write("  ".join(f"{c}={_text_cell(r.get(c))}" for c in columns) + "\n")


def _csv_cell(v, key=None) -> str:
    j = _jsonable(v, key)
    return json.dumps(j, sort_keys=True) if isinstance(j, (dict, list)) else ("" if j is None else str(j))


def _text_cell(v) -> str:
    return _csv_cell(v)


# table / poly


def _value(family: str, n: int, k: int, cfg: CommandConfig):
    x = cfg.x
    if family == "poly-bernoulli":
        return pb.pb_number(n, k) if x is None else poly_eval(pb.pb_poly_closed(n, k), x)
    if family == "type-c":
        return pb.pb_typeC(n, k)
    if family == "poly-euler-1":
        return pe.pe_incexc("first", n, k)
    if family == "poly-euler-2":
        return pe.pe_incexc("second", n, k)
    if family == "eulerian":
        p = eu.eulerian_rec(n, Fraction(k))
        return p if x is None else poly_eval(p, x)
    if family == "stirling2":
        p = sti.stirling2_weighted(n, k)
        return p if x is None else poly_eval(p, x)
    if family == "stirling1":
        p = sti.stirling1_weighted(n, k)
        return p if x is None else poly_eval(p, x)
    raise UsageError(f"unknown family {family!r}")


def run_table(cfg: CommandConfig) -> int:
    family = cfg.family or "poly-euler-1"
    if family not in TABLE_FAMILIES:
        raise UsageError(f"unknown table family {family!r}; choose from {', '.join(TABLE_FAMILIES)}")
    ns = range(cfg.n[0], cfg.n[1] + 1)
    cfg.params = {"n": list(cfg.n), "k": list(cfg.k), "x": cfg.x}
    if family == "stephan":
        cfg.params = {"n": list(cfg.n)}
        records = [{"n": n, "a": st.a_seq(n), "b": st.b_seq(n)} for n in ns]
        if cfg.fmt == "text":
            for r in records:
                print(f"{r['n']:>3}  {r['a']}  {r['b']}")
        else:
            emit(cfg, family, records, ["n", "a", "b"])
        return 0
    if family == "lehmer":
        cfg.params = {"n": list(cfg.n)}
        records = [{"n": n, "p": st.pq(n).p, "q": st.pq(n).q} for n in ns]
        emit(cfg, family, records, ["n", "p", "q"])
        return 0
    ks = range(cfg.k[0], cfg.k[1] + 1)
    grid = [[_value(family, n, k, cfg) for k in ks] for n in ns]
    if cfg.fmt == "text":
        cells = [[_text_cell(v) for v in row] for row in grid]
        width = max((len(c) for row in cells for c in row), default=1)
        print("n\\k " + " ".join(f"{k:>{width}}" for k in ks))
        for n, row in zip(ns, cells):
            print(f"{n:>3} " + " ".join(f"{c:>{width}}" for c in row))
    else:
        records = [{"n": n, "k": k, "value": v} for n, row in zip(ns, grid) for k, v in zip(ks, row)]
        emit(cfg, family, records, ["n", "k", "value"])
    return 0


def run_poly(cfg: CommandConfig) -> int:
    family = cfg.family or "poly-bernoulli"
    if family not in POLY_FAMILIES:
        raise UsageError(f"unknown poly family {family!r}; choose from {', '.join(POLY_FAMILIES)}")
    cfg.params = {"n": list(cfg.n), "k": list(cfg.k), "r": cfg.r, "x": cfg.x}
    records = []
    for n in range(cfg.n[0], cfg.n[1] + 1):
        if family in ("lehmer-p", "lehmer-q"):
            pair = st.pq(n)
            polys = [(None, pair.p if family == "lehmer-p" else pair.q)]
        elif family == "eulerian":
            polys = [(cfg.r, eu.eulerian_rec(n, cfg.r))]
        elif family == "poly-bernoulli":
            polys = [(k, pb.pb_poly_closed(n, k)) for k in range(cfg.k[0], cfg.k[1] + 1)]
        elif family == "stirling2":
            polys = [(k, sti.stirling2_weighted(n, k)) for k in range(cfg.k[0], cfg.k[1] + 1)]
        else:
            polys = [(k, sti.stirling1_weighted(n, k)) for k in range(cfg.k[0], cfg.k[1] + 1)]
        for k, p in polys:
            rec = {"n": n, "k": k, "value": p}
            if cfg.x is not None:
                rec["value"] = poly_eval(p, cfg.x)
            records.append(rec)
    emit(cfg, family, records, ["n", "k", "value"])
    return 0


# verify


def run_verify(cfg: CommandConfig) -> int:
    if cfg.suite != "all" and cfg.suite not in SUITES:
        raise UsageError(f"unknown suite {cfg.suite!r}")
    vc = VerifyConfig(series_order=cfg.series_order)
    if cfg.max_n is not None:
        vc.max_n = cfg.max_n
        if cfg.suite == "stephan":
            vc.stephan_n = cfg.max_n
    if cfg.max_k is not None:
        vc.max_k = cfg.max_k
    if cfg.enum_bound is not None:
        vc.enum_bound = cfg.enum_bound
    names = SUITES if cfg.suite == "all" else (cfg.suite,)
    cfg.params = {"suite": cfg.suite, "max_n": vc.max_n, "max_k": vc.max_k, "stephan_n": vc.stephan_n,
                  "enum_bound": vc.enum_bound, "series_order": vc.series_order}
    results = run_suites(names, vc, jobs=cfg.jobs)
    failed = [(s, r) for s, r in results if not r.passed]
    columns = ["suite", "check", "anchor", "status", "inputs", "expected", "actual"]
    records = [{"suite": s, **r.to_dict()} for s, r in results]
    if cfg.fmt == "text":
        for s, r in results:
            print(f"[{r.status.upper()}] {s}: {r.check}  ({r.anchor})")
        if failed:
            print(f"\n{len(failed)} check(s) failed:", file=sys.stderr)
            fail_cfg = CommandConfig("verify", fmt="json", params=cfg.params)
            emit(fail_cfg, "verify", [{"suite": s, **r.to_dict()} for s, r in failed], columns, out=sys.stderr)
        else:
            print(f"\nall {len(results)} checks passed")
    else:
        emit(cfg, "verify", records, columns)
    return 1 if failed else 0


# zeta / stephan


def run_zeta(cfg: CommandConfig) -> int:
    cfg.params = {"k": list(cfg.k)}
    records = []
    ok = True
    for k in range(cfg.k[0], cfg.k[1] + 1):
        z = st.zeta_cb_neg(k)
        res = st.zeta_cb_residual(k, 200)
        ok &= res < 1e-10
        records.append({
            "k": k, "u": z.u, "v": z.v, "exact": str(z),
            "approx_value": f"{z.to_decimal(30)}", "approx_residual": f"{float(res):.3e}",
        })
    if cfg.fmt == "text":
        for r in records:
            print(f"k={r['k']}: {r['exact']} ~ {r['approx_value']}  (partial-sum residual {r['approx_residual']})")
    else:
        emit(cfg, "zeta", records, ["k", "u", "v", "exact", "approx_value", "approx_residual"])
    return 0 if ok else 1


def run_stephan(cfg: CommandConfig) -> int:
    cfg.params = {"n": list(cfg.n)}
    records = []
    for n in range(cfg.n[0], cfg.n[1] + 1):
        a, b = st.a_seq(n), st.b_seq(n)
        records.append({"n": n, "a": a, "b": b, "equal": a == b})
    emit(cfg, "stephan", records, ["n", "a", "b", "equal"])
    return 0 if all(r["equal"] for r in records) else 1


# enumerate


def _render_word(w) -> str:
    return " ".join(str(c) for c in w)


def _render_cycles(cycles) -> str:
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def _render_partition(p) -> str:
    return "".join("{" + ",".join(map(str, blk)) + "}" for blk in p)


def _objects(family: str, n: int, k: int, r: int):
    labels = list(range(1, n + 1))
    if family == "callan":
        return map(oracle.render, oracle.iter_callan(labels, list(range(1, k + 1))))
    if family == "extended":
        return map(oracle.render, oracle.iter_extended_callan(n, k, r))
    if family == "abundant":
        return map(oracle.render, oracle.iter_abundant_callan(n, k))
    if family == "typec":
        return (oracle.render(c) for c in oracle.iter_callan(labels, list(range(1, k + 1))) if not c.extra_red)
    if family in ("eseq-odd", "eseq-even"):
        return map(oracle.render, oracle.iter_esequences(n, k, family.split("-")[1]))
    if family == "runperm":
        return map(_render_word, oracle.iter_runperms(n, r))
    if family == "s2":
        return (_render_partition(p) for p in oracle.set_partitions([oracle.STAR, *labels]) if len(p) == k + 1)
    if family == "s1":
        return map(_render_cycles, oracle.iter_cycle_perms(n, k))
    raise UsageError(f"unknown enumerate family {family!r}; choose from {', '.join(ENUM_FAMILIES)}")


def run_enumerate(cfg: CommandConfig) -> int:
    family = cfg.family or "callan"
    n, k = cfg.n[1], cfg.k[1]
    if cfg.r.denominator != 1 or cfg.r < 0:
        raise UsageError("--r must be a nonnegative integer for enumeration")
    r = int(cfg.r)
    size = n + k + (r if family in ("extended", "runperm") else 0)
    bound = oracle.DEFAULT_BOUND if cfg.enum_bound is None else cfg.enum_bound
    if size > bound:
        raise UsageError(f"enumeration bound exceeded: size {size} > --enum-bound {bound}")
    cfg.params = {"n": n, "k": k, "r": r}
    objs = _objects(family, n, k, r)
    if cfg.fmt == "text":
        count = 0
        for s in objs:
            print(s)
            count += 1
        print(f"# {count} objects", file=sys.stderr)
    else:
        emit(cfg, family, [{"index": i, "object": s} for i, s in enumerate(objs)], ["index", "object"])
    return 0


COMMANDS = {
    "table": run_table,
    "poly": run_poly,
    "verify": run_verify,
    "zeta": run_zeta,
    "stephan": run_stephan,
    "enumerate": run_enumerate,
}

DEFAULT_N = {"stephan": "0..30", "zeta": "0..0", "enumerate": "2..2"}
DEFAULT_K = {"zeta": "0..8", "enumerate": "2..2"}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polyseq", description="Exact poly-Bernoulli, poly-Euler and Eulerian computations.")
    p.add_argument("subcommand", choices=sorted(COMMANDS))
    p.add_argument("--family")
    p.add_argument("--n", help="index range A..B")
    p.add_argument("--k", help="index range A..B")
    p.add_argument("--r", default="0", help="rational p/q")
    p.add_argument("--x", help="rational p/q; evaluate polynomials here")
    p.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
    p.add_argument("--series-order", type=int, default=14)
    p.add_argument("--enum-bound", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-k", type=int)
    p.add_argument("--suite", default="all")
    p.add_argument("--jobs", type=int, default=1, help="parallel suite workers")
    return p


def _glue_negatives(argv: list[str]) -> list[str]:
    """Let ``--x -1/2`` through; argparse would read ``-1/2`` as an option."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] in ("--x", "--r") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def parse_config(argv=None) -> CommandConfig:
    parser = build_parser()
    a = parser.parse_args(_glue_negatives(sys.argv[1:] if argv is None else list(argv)))
    try:
        cfg = CommandConfig(
            subcommand=a.subcommand,
            family=a.family,
            n=parse_range(a.n or DEFAULT_N.get(a.subcommand, "0..4")),
            k=parse_range(a.k or DEFAULT_K.get(a.subcommand, "0..3")),
            r=parse_rational(a.r),
            x=None if a.x is None else parse_rational(a.x),
            fmt=a.fmt,
            series_order=a.series_order,
            enum_bound=a.enum_bound,
            max_n=a.max_n,
            max_k=a.max_k,
            suite=a.suite,
            jobs=a.jobs,
        )
        for name in ("series_order", "enum_bound", "max_n", "max_k", "jobs"):
            v = getattr(cfg, name)
            if v is not None and v < (1 if name == "jobs" else 0):
                raise UsageError(f"--{name.replace('_', '-')} must be nonnegative")
    except UsageError as e:
        parser.error(str(e))
    return cfg


def main(argv=None) -> int:
    cfg = parse_config(argv)
    try:
        return COMMANDS[cfg.subcommand](cfg)
    except (UsageError, oracle.EnumerationBoundError) as e:
        print(f"polyseq: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
