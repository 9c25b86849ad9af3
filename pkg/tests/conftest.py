import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import settings

from cqroots.mv import CL12, CL30, Multivector3
from cqroots.quaternion import FAMILIES, ComplexQuaternion

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

coefficient = st.floats(-4, 4, allow_nan=False, allow_infinity=False)


def multivectors(sig=CL30):
    return st.lists(coefficient, min_size=8, max_size=8).map(lambda c: Multivector3(c, sig))


def quaternions(family):
    return st.lists(coefficient, min_size=8, max_size=8).map(lambda c: ComplexQuaternion.from_basis8(family, c))


families = st.sampled_from(sorted(FAMILIES.values(), key=lambda f: f.name))
signatures = st.sampled_from([CL30, CL12])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# one verdict line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and rep.passed):
        return
    number, title = mark.args
    if rep.when == "call" or rep.failed:
        verdict = "PASS" if rep.passed else "FAIL"
        ACCEPTANCE_LINES[number] = f"AC{number} {verdict}  {title}"


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
