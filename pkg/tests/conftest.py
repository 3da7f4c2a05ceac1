from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

settings.register_profile("default", max_examples=500, deadline=None)
settings.load_profile("default")


def rationals(max_num=200, max_den=60, min_value=None, max_value=None):
    s = st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))
    if min_value is not None:
        s = s.filter(lambda x: x >= min_value)
    if max_value is not None:
        s = s.filter(lambda x: x <= max_value)
    return s


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[number])
