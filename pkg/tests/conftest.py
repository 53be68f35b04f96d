import pytest


def pytest_terminal_summary(terminalreporter):
    """Replay the acceptance pass/fail lines where capture cannot eat them."""
    try:
        from test_acceptance import ACCEPTANCE_LINES
    except ImportError:
        return
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

from ringlab.core import build_zmod
from ringlab.specdoc import build_ring
from ringlab.verify import example_local_algebra_spec


@pytest.fixture(scope="session")
def ex_local_32():
    """The 32-element local Z2-algebra with basis {1,x,y,y2,y3}, x^2=xy=y^4=0."""
    return build_ring(example_local_algebra_spec())


@pytest.fixture(scope="session")
def z12():
    return build_zmod(12)
