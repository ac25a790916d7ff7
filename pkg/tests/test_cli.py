import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polyseq import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table_poly_euler(capsys):
    code, out, _ = run(capsys, "table", "--family", "poly-euler-1", "--n", "0..4", "--k", "0..3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["family"] == "poly-euler-1"
    grid = {(r["n"], r["k"]): r["value"] for r in doc["records"]}
    assert grid[(4, 3)] == "42840" and grid[(3, 2)] == "493" and len(grid) == 20


def test_table_stephan(capsys):
    code, out, _ = run(capsys, "table", "--family", "stephan", "--n", "0..3", "--format", "json")
    rows = [(r["a"], r["b"]) for r in json.loads(out)["records"]]
    assert code == 0 and rows == [("1", "1"), ("2", "2"), ("4", "4"), ("10", "10")]


def test_table_poly_bernoulli_csv(capsys):
    code, out, _ = run(capsys, "table", "--family", "poly-bernoulli", "--n", "0..0", "--k", "0..5", "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "n,k,value"
    assert [l.split(",")[2] for l in lines[1:]] == ["1"] * 6


def test_poly_rational_values(capsys):
    code, out, _ = run(capsys, "poly", "--family", "eulerian", "--n", "1", "--r", "1/2", "--format", "json")
    doc = json.loads(out)
    assert doc["records"][0]["value"] == "1/2*x + 1"
    code, out, _ = run(capsys, "poly", "--family", "poly-bernoulli", "--n", "1", "--k", "1", "--x", "-1/2")
    assert "value=3/2" in out


def test_verify_stephan(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "stephan", "--max-n", "30")
    assert code == 0
    assert "a_n = b_n, n <= 30" in out and "Stephan's conjecture" in out


def test_verify_polyeuler_table(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "polyeuler", "--max-n", "4", "--max-k", "3")
    assert code == 0 and "table reproduced" in out


def test_verify_oracles_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "oracles", "--enum-bound", "6", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and all(r["status"] == "pass" for r in doc["records"])


def test_verify_failure_exit_code(capsys, monkeypatch):
    from polyseq import checks

    def broken(cfg):
        return [checks.run_cases("broken", "oeis", [({"n": 0}, lambda: (1, 2))])]

    monkeypatch.setitem(checks.SUITE_FUNCS, "eulerian", broken)
    code, out, err = run(capsys, "verify", "--suite", "eulerian")
    assert code == 1
    assert "[FAIL]" in out
    failed = json.loads(err[err.index("{"):])
    assert failed["records"][0]["anchor"] == "vendored OEIS fixture agrees"


def test_zeta(capsys):
    code, out, _ = run(capsys, "zeta", "--k", "0..1")
    assert code == 0
    assert "1/3 + 2/9*pi/sqrt(3) ~ 0.7363998587" in out
    assert "2/3 + 2/9*pi/sqrt(3)" in out


def test_zeta_residuals(capsys):
    code, out, _ = run(capsys, "zeta", "--k", "0..8", "--format", "json")
    assert code == 0
    assert all(float(r["approx_residual"]) < 1e-10 for r in json.loads(out)["records"])


def test_stephan_subcommand(capsys):
    code, out, _ = run(capsys, "stephan", "--n", "0..10", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "n,a,b,equal"


def test_enumerate_stream(capsys):
    code, out, err = run(capsys, "enumerate", "--family", "typec", "--n", "2", "--k", "2")
    assert code == 0 and len(out.splitlines()) == 7 and "# 7 objects" in err
    code, out, _ = run(capsys, "enumerate", "--family", "abundant", "--n", "1", "--k", "1")
    assert sorted(out.splitlines()) == sorted(["(b1,r1)(b*,r*)|", "(b1,b*,r1,r*)|", "(b1,b*,r*)|r1"])


@pytest.mark.parametrize("argv", [
    ["table", "--n", "3..1"],
    ["table", "--n", "x"],
    ["table", "--x", "1/0"],
    ["bogus"],
    ["verify", "--suite", "nope"],
    ["table", "--family", "nope"],
    ["enumerate", "--n", "9", "--k", "9"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as e:
        code = cli.main(argv)
        raise SystemExit(code)
    assert e.value.code == 2


@given(st.fractions(max_denominator=1000))
def test_rational_round_trip(q):
    s = cli.render_rational(q)
    assert cli.parse_rational(s) == q
    assert cli.render_rational(cli.parse_rational(s)) == s


def test_rational_canonical_form():
    assert cli.render_rational(cli.parse_rational(" 6/4 ")) == "3/2"
    assert cli.render_rational(cli.parse_rational("-0/5")) == "0"


def test_json_round_trip(capsys):
    code, out, _ = run(capsys, "table", "--family", "poly-bernoulli", "--n", "0..2", "--k", "0..2", "--x", "1/3",
                       "--format", "json")
    doc = json.loads(out)
    assert json.loads(json.dumps(doc)) == doc
    assert all(isinstance(r["value"], str) for r in doc["records"])
    assert Fraction(doc["records"][-1]["value"]) == Fraction(1, 9) + Fraction(8, 3) + 14
