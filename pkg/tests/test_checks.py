import pytest

from polyseq import checks
from polyseq.anchors import ANCHORS, anchor
from polyseq.oeis import FIXTURES, load


def test_fixtures_load():
    assert set(FIXTURES) == {"A003462", "A007051", "A028296", "A098830"}
    assert load("A098830")[:4] == (1, 2, 4, 10)
    assert load("A028296")[:4] == (1, -1, 5, -61)


def test_run_cases_reports_counterexample():
    cases = [({"n": n}, lambda n=n: (n, n if n < 3 else -1)) for n in range(5)]
    rec = checks.run_cases("toy", "oeis", cases)
    assert rec.status == "fail"
    assert rec.inputs == {"n": 3}
    assert rec.anchor == anchor("oeis")


@pytest.mark.parametrize("suite", checks.SUITES)
def test_suite_passes_at_small_bounds(suite):
    cfg = checks.VerifyConfig(max_n=4, max_k=3, stephan_n=10, enum_bound=4, series_order=10)
    recs = checks.SUITE_FUNCS[suite](cfg)
    assert recs
    assert all(r.passed for r in recs), [r for r in recs if not r.passed]
    assert all(r.anchor in ANCHORS.values() for r in recs)


def test_aggregation_is_sorted_and_deterministic():
    cfg = checks.VerifyConfig(max_n=3, max_k=2, stephan_n=5, enum_bound=3, series_order=8)
    a = checks.run_suites(["stirling", "eulerian"], cfg)
    b = checks.run_suites(["eulerian", "stirling"], cfg, jobs=2)
    assert [(s, r.check) for s, r in a] == [(s, r.check) for s, r in b]
    assert a == sorted(a, key=lambda t: (t[0], t[1].check))
