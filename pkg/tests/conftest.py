from fractions import Fraction

from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small = st.integers(min_value=-6, max_value=6)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
nonneg_rationals = st.fractions(min_value=0, max_value=5, max_denominator=7)


def polys(max_deg=4):
    return st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5), max_size=max_deg + 1)


F = Fraction


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
